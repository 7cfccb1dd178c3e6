#include "bucl/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <mutex>
#include <thread>

#include "bucl/errors.hpp"
#include "bucl/exact.hpp"
#include "bucl/generators.hpp"

namespace bucl {

namespace {

constexpr double kWilsonZ = 1.96;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

template <class T>
T parse_field(const std::string& s, const char* name, std::size_t line_no) {
  std::istringstream is(s);
  T v{};
  if (!(is >> v) || !is.eof()) {
    throw FormatError("csv line " + std::to_string(line_no) + ": bad " + name + " '" + s + "'");
  }
  return v;
}

double parse_double_field(const std::string& s, const char* name, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw FormatError("csv line " + std::to_string(line_no) + ": bad " + name + " '" + s + "'");
}

void check_certificate(const Graph& G, const Verdict& v, const BaseGraphProfile& profile) {
  if (v.witness && !verify_evidence(G, *v.witness, profile.H, profile.delta)) {
    throw std::logic_error("a rejection certificate failed verification");
  }
}

}  // namespace

std::string to_string(TesterKind kind) {
  switch (kind) {
    case TesterKind::adaptive: return "adaptive";
    case TesterKind::nonadaptive: return "nonadaptive";
    case TesterKind::combined_adaptive: return "combined-adaptive";
    case TesterKind::combined_nonadaptive: return "combined-nonadaptive";
    case TesterKind::low_degree: return "low-degree";
  }
  return "?";
}

TesterKind parse_tester_kind(std::string_view name) {
  for (auto k : {TesterKind::adaptive, TesterKind::nonadaptive, TesterKind::combined_adaptive,
                 TesterKind::combined_nonadaptive, TesterKind::low_degree}) {
    if (to_string(k) == name) return k;
  }
  throw ConfigError("unknown tester '" + std::string(name) + "'");
}

std::string to_string(Workload w) {
  switch (w) {
    case Workload::member: return "member";
    case Workload::far_cycle: return "far-cycle";
    case Workload::high_degree: return "high-degree";
    case Workload::planted: return "planted";
    case Workload::fixed: return "fixed";
  }
  return "?";
}

Workload parse_workload(std::string_view name) {
  for (auto w : {Workload::member, Workload::far_cycle, Workload::high_degree, Workload::planted, Workload::fixed}) {
    if (to_string(w) == name) return w;
  }
  throw ConfigError("unknown workload '" + std::string(name) + "'");
}

std::size_t instance_size(const TrialConfig& config, double eps) {
  if (config.workload == Workload::fixed) {
    if (!config.fixed) throw ConfigError("fixed workload without an instance");
    return config.fixed->size();
  }
  if (config.matched_k) {
    const double n = std::round(*config.matched_k / eps);
    if (!(n >= 1)) throw ConfigError("matched N is below one vertex");
    return static_cast<std::size_t>(n);
  }
  return config.n;
}

Graph make_instance(const TrialConfig& config, double eps, std::uint64_t seed) {
  const std::size_t n = instance_size(config, eps);
  const std::uint64_t gseed = mix_seed(seed, 0x67656e);
  switch (config.workload) {
    case Workload::member: return gen_member(config.profile.H, n, eps, config.c, gseed).graph;
    case Workload::far_cycle: return gen_far_cycle_mismatch(config.cycle_t, n, eps, gseed);
    case Workload::high_degree: return gen_high_degree(n, eps, config.c, gseed);
    case Workload::planted: {
      const auto base = gen_member(config.profile.H, n, eps, config.c, gseed);
      return gen_planted_edges(base.graph, base.certificate, config.planted, mix_seed(gseed, 1));
    }
    case Workload::fixed: return *config.fixed;
  }
  throw ConfigError("unknown workload");
}

Verdict run_tester(const TrialConfig& config, const Graph& G, double eps, std::uint64_t seed) {
  Verdict v;
  switch (config.tester) {
    case TesterKind::adaptive: {
      AdaptiveSession session(G, seed);
      v = adaptive_buc_test(session, eps, config.profile, config.c, config.params);
      break;
    }
    case TesterKind::nonadaptive: {
      NonAdaptivePlan plan(G, seed);
      v = nonadaptive_buc_test(plan, eps, config.profile, config.c, config.params);
      break;
    }
    case TesterKind::combined_adaptive:
      v = combined_test(Variant::adaptive, G, eps, config.profile, config.c, config.params, seed);
      break;
    case TesterKind::combined_nonadaptive:
      v = combined_test(Variant::nonadaptive, G, eps, config.profile, config.c, config.params, seed);
      break;
    case TesterKind::low_degree: {
      NonAdaptivePlan plan(G, seed);
      v = low_degree_test(plan, eps, config.c, config.beta, config.params);
      break;
    }
  }
  check_certificate(G, v, config.profile);
  return v;
}

std::vector<ExperimentRecord> run_trials(const TrialConfig& config) {
  if (config.eps.empty()) throw ConfigError("empty eps grid");
  if (config.trials == 0) throw ConfigError("trial count must be positive");
  for (double e : config.eps) {
    if (!(e > 0 && e < 1)) throw ConfigError("eps values must lie in (0, 1)");
  }
  config.params.validate();

  const std::size_t jobs = config.eps.size() * config.trials;
  std::vector<ExperimentRecord> records(jobs);
  const std::string tester = to_string(config.tester);
  const std::string fp = config.params.fingerprint();

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t job = next.fetch_add(1);
      if (job >= jobs) return;
      try {
        const double eps = config.eps[job / config.trials];
        const std::size_t trial = job % config.trials;
        const std::uint64_t seed = config.base_seed + trial;
        const Graph G = make_instance(config, eps, seed);
        const auto start = std::chrono::steady_clock::now();
        const Verdict v = run_tester(config, G, eps, seed);
        const auto stop = std::chrono::steady_clock::now();
        ExperimentRecord& r = records[job];
        r.tester = tester;
        r.h = config.h_label;
        r.n = G.size();
        r.eps = eps;
        r.c = config.c;
        r.params_fp = fp;
        r.seed = seed;
        r.trial = trial;
        r.verdict = v.rejected() ? "reject" : "accept";
        r.evidence = v.evidence_kind();
        r.distinct_queries = v.ledger.distinct_count();
        r.wall_ms =
            config.timing ? std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count() : 0;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(jobs);
        return;
      }
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(config.workers, jobs));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

void write_csv(std::ostream& out, std::span<const ExperimentRecord> records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.tester << ',' << r.h << ',' << r.n << ',' << fmt_double(r.eps) << ',' << fmt_double(r.c) << ','
        << r.params_fp << ',' << r.seed << ',' << r.trial << ',' << r.verdict << ',' << r.evidence << ','
        << r.distinct_queries << ',' << r.wall_ms << '\n';
  }
}

std::vector<ExperimentRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw FormatError("csv: missing or unexpected header");
  std::vector<ExperimentRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv_row(line);
    if (f.size() != 12) throw FormatError("csv line " + std::to_string(line_no) + ": expected 12 fields");
    ExperimentRecord r;
    r.tester = f[0];
    r.h = f[1];
    r.n = parse_field<std::size_t>(f[2], "N", line_no);
    r.eps = parse_double_field(f[3], "eps", line_no);
    r.c = parse_double_field(f[4], "c", line_no);
    r.params_fp = f[5];
    r.seed = parse_field<std::uint64_t>(f[6], "seed", line_no);
    r.trial = parse_field<std::size_t>(f[7], "trial", line_no);
    r.verdict = f[8];
    if (r.verdict != "accept" && r.verdict != "reject") {
      throw FormatError("csv line " + std::to_string(line_no) + ": verdict must be accept or reject");
    }
    r.evidence = f[9];
    r.distinct_queries = parse_field<std::size_t>(f[10], "distinct_queries", line_no);
    r.wall_ms = parse_field<std::int64_t>(f[11], "wall_ms", line_no);
    out.push_back(std::move(r));
  }
  return out;
}

AcceptanceEstimate wilson(std::size_t accepts, std::size_t trials) {
  if (trials == 0) throw ArgumentError("acceptance estimate needs at least one trial");
  if (accepts > trials) throw ArgumentError("more accepts than trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(accepts) / n;
  const double z2 = kWilsonZ * kWilsonZ;
  const double denom = 1 + z2 / n;
  const double center = (p + z2 / (2 * n)) / denom;
  const double half = kWilsonZ * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  AcceptanceEstimate e;
  e.trials = trials;
  e.accepts = accepts;
  e.p = p;
  e.lo = std::clamp(center - half, 0.0, p);
  e.hi = std::clamp(center + half, p, 1.0);
  return e;
}

AcceptanceEstimate estimate_acceptance(std::span<const ExperimentRecord> cell) {
  if (cell.empty()) throw ArgumentError("acceptance estimate of an empty cell");
  const auto accepts =
      static_cast<std::size_t>(std::count_if(cell.begin(), cell.end(), [](const auto& r) { return r.verdict == "accept"; }));
  return wilson(accepts, cell.size());
}

SlopeFit fit_slope(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw ArgumentError("fit_slope needs at least two points");
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& [eps, q] : points) {
    if (!(eps > 0) || !(q > 0)) throw ArgumentError("fit_slope needs positive eps and query counts");
    xs.push_back(std::log(1.0 / eps));
    ys.push_back(std::log(q));
  }
  const double k = static_cast<double>(xs.size());
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0;
  double sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx <= 1e-300) throw ArgumentError("fit_slope needs at least two distinct eps values");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    fit.residual += r * r;
  }
  return fit;
}

double median(std::vector<double> values) {
  if (values.empty()) throw ArgumentError("median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size() / 2;
  return values.size() % 2 ? values[m] : (values[m - 1] + values[m]) / 2;
}

std::vector<std::pair<double, double>> median_queries(std::span<const ExperimentRecord> records) {
  std::vector<double> order;
  for (const auto& r : records) {
    if (std::find(order.begin(), order.end(), r.eps) == order.end()) order.push_back(r.eps);
  }
  std::vector<std::pair<double, double>> out;
  for (double e : order) {
    std::vector<double> q;
    for (const auto& r : records) {
      if (r.eps == e) q.push_back(static_cast<double>(r.distinct_queries));
    }
    out.emplace_back(e, median(std::move(q)));
  }
  return out;
}

}  // namespace bucl
