// Command-line front end: instance generation, exact checks, single tester
// runs and trial grids.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bucl/errors.hpp"
#include "bucl/exact.hpp"
#include "bucl/generators.hpp"
#include "bucl/graph_io.hpp"
#include "bucl/harness.hpp"
#include "bucl/testers.hpp"

namespace {

enum Exit { kOk = 0, kReject = 1, kUsage = 2, kCapacity = 3 };

struct ParamOptions {
  std::vector<std::string> sets;
  std::optional<std::size_t> w;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--set", sets, "Override a tester constant, key=value (repeatable)");
    cmd->add_option("--W", w, "W(H) override");
  }

  bucl::TesterParams build() const {
    bucl::TesterParams p;
    for (const auto& kv : sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw bucl::ConfigError("--set expects key=value, got '" + kv + "'");
      p.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (w) p.w_override = *w;
    p.validate();
    return p;
  }
};

// W is only searched for when a BUC stage needs it and no override is given.
bucl::BaseGraphProfile load_profile(const std::string& path, bool needs_w, const bucl::TesterParams& params) {
  bucl::Graph H = bucl::read_graph_file(path);
  if (needs_w && !params.w_override) return bucl::profile_with_w(std::move(H));
  return bucl::make_profile(std::move(H));
}

bool needs_w(bucl::TesterKind k) { return k != bucl::TesterKind::low_degree; }

void write_output(const std::string& path, const std::function<void(std::ostream&)>& emit) {
  if (path.empty() || path == "-") {
    emit(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw bucl::ConfigError("cannot write " + path);
  emit(out);
}

std::string describe(const bucl::Verdict& v) {
  std::string s = v.rejected() ? "reject" : "accept";
  s += " evidence=" + v.evidence_kind();
  s += " distinct_queries=" + std::to_string(v.ledger.distinct_count());
  if (v.degree) {
    s += " level=" + std::to_string(v.degree->level) + " vertex=" + std::to_string(v.degree->vertex) +
         " estimate=" + std::to_string(v.degree->estimate) + " threshold=" + std::to_string(v.degree->threshold);
  }
  if (v.witness) {
    if (const auto* f = std::get_if<bucl::PartitionabilityWitness>(&*v.witness)) {
      s += " center=" + std::to_string(f->center) + " fan=";
      for (std::size_t i = 0; i < f->fan.size(); ++i) s += (i ? "," : "") + std::to_string(f->fan[i]);
    } else {
      s += " vertices=";
      const auto& u = std::get<bucl::InducedSubgraphWitness>(*v.witness).vertices;
      for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + std::to_string(u[i]);
    }
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blow-up collection property testers and exact oracles"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  std::string gen_kind = "member";
  std::string gen_h;
  std::size_t gen_n = 0;
  double gen_eps = 0.01;
  double gen_c = 2;
  std::uint64_t gen_seed = 0;
  std::size_t gen_t = 4;
  std::size_t gen_k = 1;
  std::string gen_out;
  gen->add_option("--kind", gen_kind, "member | far-cycle | high-degree | planted")
      ->check(CLI::IsMember({"member", "far-cycle", "high-degree", "planted"}));
  gen->add_option("--H", gen_h, "Base graph file (member, planted)");
  gen->add_option("-N,--N", gen_n, "Vertex count")->required();
  gen->add_option("--eps", gen_eps, "Proximity parameter");
  gen->add_option("--c", gen_c, "Degree constant");
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_option("--t", gen_t, "far-cycle: groups are blow-ups of C_{t+1}");
  gen->add_option("--k", gen_k, "planted: number of cross-group edges");
  gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

  // check
  auto* check = app.add_subcommand("check", "Decide membership in BUC(H) and print a certificate");
  std::string check_g;
  std::string check_h;
  bool check_brute = false;
  check->add_option("--G", check_g, "Graph file")->required();
  check->add_option("--H", check_h, "Base graph file")->required();
  check->add_flag("--bruteforce", check_brute, "Use the exhaustive labeling search");

  // dist
  auto* dist = app.add_subcommand("dist", "Exact distances");
  std::string dist_g;
  std::string dist_h;
  std::optional<std::size_t> dist_ld;
  dist->add_option("--G", dist_g, "Graph file")->required();
  dist->add_option("--H", dist_h, "Base graph file (distance to BUC(H))");
  dist->add_option("--ld", dist_ld, "Degree bound D (distance to LD_D)");

  // witness
  auto* witness = app.add_subcommand("witness", "Enumerate minimal witnesses and compute W(H)");
  std::string wit_h;
  std::size_t wit_n = 7;
  std::string wit_out;
  witness->add_option("--H", wit_h, "Base graph file")->required();
  witness->add_option("--n-max", wit_n, "Largest witness size searched");
  witness->add_option("-o,--out", wit_out, "Write the witness catalog here");

  // test
  auto* test = app.add_subcommand("test", "Run one tester on one graph");
  std::string test_tester = "adaptive";
  std::string test_g;
  std::string test_h;
  double test_eps = 0.01;
  double test_c = 2;
  double test_beta = 0.25;
  std::uint64_t test_seed = 0;
  ParamOptions test_params;
  test->add_option("--tester", test_tester,
                   "adaptive | nonadaptive | combined-adaptive | combined-nonadaptive | low-degree");
  test->add_option("--G", test_g, "Graph file")->required();
  test->add_option("--H", test_h, "Base graph file");
  test->add_option("--eps", test_eps, "Proximity parameter");
  test->add_option("--c", test_c, "Degree constant");
  test->add_option("--beta", test_beta, "low-degree: farness fraction");
  test->add_option("--seed", test_seed, "Seed");
  test_params.add_to(test);

  // exp
  auto* exp = app.add_subcommand("exp", "Run a trial grid and write CSV");
  std::string exp_tester = "adaptive";
  std::string exp_workload = "member";
  std::string exp_h;
  std::string exp_g;
  std::size_t exp_n = 0;
  std::vector<double> exp_eps;
  double exp_c = 2;
  double exp_beta = 0.25;
  std::size_t exp_trials = 10;
  std::uint64_t exp_seed = 0;
  std::size_t exp_workers = 1;
  std::optional<double> exp_matched;
  std::size_t exp_t = 4;
  std::size_t exp_k = 1;
  bool exp_no_timing = false;
  std::string exp_out;
  ParamOptions exp_params;
  exp->add_option("--tester", exp_tester, "Tester id");
  exp->add_option("--workload", exp_workload, "member | far-cycle | high-degree | planted | fixed");
  exp->add_option("--H", exp_h, "Base graph file");
  exp->add_option("--G", exp_g, "fixed: graph file");
  exp->add_option("-N,--N", exp_n, "Vertex count");
  exp->add_option("--eps", exp_eps, "Proximity values")->required();
  exp->add_option("--c", exp_c, "Degree constant");
  exp->add_option("--beta", exp_beta, "low-degree: farness fraction");
  exp->add_option("--trials", exp_trials, "Trials per eps");
  exp->add_option("--seed", exp_seed, "Base seed; trial i uses seed+i");
  exp->add_option("--workers", exp_workers, "Worker threads");
  exp->add_option("--matched-n", exp_matched, "Use N = round(K/eps) per eps");
  exp->add_option("--t", exp_t, "far-cycle: groups are blow-ups of C_{t+1}");
  exp->add_option("--k", exp_k, "planted: cross-group edges");
  exp->add_flag("--no-timing", exp_no_timing, "Write wall_ms=0 for byte-stable output");
  exp->add_option("-o,--out", exp_out, "CSV output (default stdout)");
  exp_params.add_to(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      std::vector<std::string> header{"kind " + gen_kind + " N " + std::to_string(gen_n) + " seed " +
                                      std::to_string(gen_seed)};
      bucl::Graph G;
      if (gen_kind == "member" || gen_kind == "planted") {
        if (gen_h.empty()) throw bucl::ConfigError("--H is required for " + gen_kind);
        const bucl::Graph H = bucl::read_graph_file(gen_h);
        auto m = bucl::gen_member(H, gen_n, gen_eps, gen_c, gen_seed);
        if (gen_kind == "member") {
          header.push_back(bucl::format_certificate(m.certificate));
          G = std::move(m.graph);
        } else {
          G = bucl::gen_planted_edges(m.graph, m.certificate, gen_k, bucl::mix_seed(gen_seed, 1));
        }
      } else if (gen_kind == "far-cycle") {
        G = bucl::gen_far_cycle_mismatch(gen_t, gen_n, gen_eps, gen_seed);
      } else {
        G = bucl::gen_high_degree(gen_n, gen_eps, gen_c, gen_seed);
      }
      write_output(gen_out, [&](std::ostream& os) { bucl::write_graph(os, G, header); });
      return kOk;
    }

    if (*check) {
      const bucl::Graph G = bucl::read_graph_file(check_g);
      const bucl::Graph H = bucl::read_graph_file(check_h);
      const auto cert = check_brute ? bucl::buc_membership_bruteforce(G, H) : bucl::is_blowup_collection(G, H);
      if (!cert) {
        std::cout << "not a member\n";
        return kReject;
      }
      std::cout << "member\n" << bucl::format_certificate(*cert) << '\n';
      return kOk;
    }

    if (*dist) {
      const bucl::Graph G = bucl::read_graph_file(dist_g);
      if (dist_h.empty() && !dist_ld) throw bucl::ConfigError("give --H, --ld or both");
      if (!dist_h.empty()) {
        std::cout << "buc " << bucl::distance_to_buc(G, bucl::read_graph_file(dist_h)) << '\n';
      }
      if (dist_ld) std::cout << "ld " << bucl::distance_to_ld(G, *dist_ld) << '\n';
      return kOk;
    }

    if (*witness) {
      const bucl::Graph H = bucl::read_graph_file(wit_h);
      const auto ws = bucl::minimal_witnesses(H, wit_n);
      const auto W = bucl::compute_W(H, wit_n);
      std::cout << "minimal_witnesses " << ws.size() << "\nW " << W.value << (W.exact ? " exact" : " lower-bound")
                << '\n';
      if (!wit_out.empty()) {
        std::vector<bucl::CatalogEntry> entries;
        for (const auto& w : ws) entries.push_back({{"minimal witness, " + std::to_string(w.size()) + " vertices"}, w});
        write_output(wit_out, [&](std::ostream& os) { bucl::write_catalog(os, entries); });
      }
      return kOk;
    }

    if (*test) {
      bucl::TrialConfig config;
      config.tester = bucl::parse_tester_kind(test_tester);
      config.params = test_params.build();
      config.c = test_c;
      config.beta = test_beta;
      if (needs_w(config.tester) && test_h.empty()) throw bucl::ConfigError("--H is required for " + test_tester);
      if (!test_h.empty()) config.profile = load_profile(test_h, needs_w(config.tester), config.params);
      const bucl::Graph G = bucl::read_graph_file(test_g);
      const bucl::Verdict v = bucl::run_tester(config, G, test_eps, test_seed);
      std::cout << describe(v) << '\n';
      return v.rejected() ? kReject : kOk;
    }

    if (*exp) {
      bucl::TrialConfig config;
      config.tester = bucl::parse_tester_kind(exp_tester);
      config.workload = bucl::parse_workload(exp_workload);
      config.params = exp_params.build();
      config.n = exp_n;
      config.eps = exp_eps;
      config.c = exp_c;
      config.beta = exp_beta;
      config.trials = exp_trials;
      config.base_seed = exp_seed;
      config.workers = exp_workers;
      config.matched_k = exp_matched;
      config.cycle_t = exp_t;
      config.planted = exp_k;
      config.timing = !exp_no_timing;
      const bool member_like = config.workload == bucl::Workload::member || config.workload == bucl::Workload::planted;
      if ((needs_w(config.tester) || member_like) && exp_h.empty()) {
        throw bucl::ConfigError("--H is required for this tester or workload");
      }
      if (!exp_h.empty()) {
        config.h_label = exp_h;
        config.profile = load_profile(exp_h, needs_w(config.tester), config.params);
      }
      if (config.workload == bucl::Workload::fixed) {
        if (exp_g.empty()) throw bucl::ConfigError("--G is required for the fixed workload");
        config.fixed = bucl::read_graph_file(exp_g);
      } else if (!config.matched_k && config.n == 0) {
        throw bucl::ConfigError("give --N or --matched-n");
      }
      const auto records = bucl::run_trials(config);
      write_output(exp_out, [&](std::ostream& os) { bucl::write_csv(os, records); });
      for (std::size_t i = 0; i < config.eps.size(); ++i) {
        const std::span<const bucl::ExperimentRecord> cell(records.data() + i * config.trials, config.trials);
        const auto est = bucl::estimate_acceptance(cell);
        std::cerr << "eps " << config.eps[i] << " N " << cell.front().n << " accept " << est.accepts << "/"
                  << est.trials << " p " << est.p << " [" << est.lo << ", " << est.hi << "]\n";
      }
      if (config.eps.size() >= 2) {
        const auto pts = bucl::median_queries(records);
        std::cerr << "slope " << bucl::fit_slope(pts).slope << '\n';
      }
      return kOk;
    }
  } catch (const bucl::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const bucl::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
