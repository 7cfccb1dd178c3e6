#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "bucl/errors.hpp"
#include "bucl/rounding.hpp"
#include "bucl/testers.hpp"

namespace bucl {

namespace {

double parse_double(std::string_view key, std::string_view value) {
  try {
    std::size_t used = 0;
    const std::string s(value);
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("parameter " + std::string(key) + ": '" + std::string(value) + "' is not a number");
  }
}

std::size_t parse_count(std::string_view key, std::string_view value) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError("parameter " + std::string(key) + ": '" + std::string(value) + "' is not a count");
  }
  return v;
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void TesterParams::validate() const {
  const std::pair<const char*, double> mults[] = {
      {"a_iter1", a_iter1}, {"a_S", a_S},   {"a_T", a_T},   {"a_iter2", a_iter2}, {"a_Tj", a_Tj},
      {"a_N1", a_N1},       {"a_N3", a_N3}, {"a_L1", a_L1}, {"a_L2", a_L2},
  };
  for (const auto& [name, value] : mults) {
    if (!(value >= 1.0) || !std::isfinite(value)) {
      throw ConfigError(std::string("multiplier ") + name + " must be a finite value >= 1");
    }
  }
  if (iter2_cap == 0) throw ConfigError("iter2_cap must be positive");
  if (w_override && *w_override < 2) throw ConfigError("W override must be at least 2");
}

void TesterParams::set(std::string_view key, std::string_view value) {
  if (key == "a_iter1") a_iter1 = parse_double(key, value);
  else if (key == "a_S") a_S = parse_double(key, value);
  else if (key == "a_T") a_T = parse_double(key, value);
  else if (key == "a_iter2") a_iter2 = parse_double(key, value);
  else if (key == "iter2_cap") iter2_cap = parse_count(key, value);
  else if (key == "a_Tj") a_Tj = parse_double(key, value);
  else if (key == "a_N1") a_N1 = parse_double(key, value);
  else if (key == "a_N3") a_N3 = parse_double(key, value);
  else if (key == "a_L1") a_L1 = parse_double(key, value);
  else if (key == "a_L2") a_L2 = parse_double(key, value);
  else if (key == "w_override" || key == "W") w_override = parse_count(key, value);
  else throw ConfigError("unknown tester parameter '" + std::string(key) + "'");
}

std::string TesterParams::canonical() const {
  std::ostringstream os;
  os << "a_iter1=" << fmt_double(a_iter1) << ";a_S=" << fmt_double(a_S) << ";a_T=" << fmt_double(a_T)
     << ";a_iter2=" << fmt_double(a_iter2) << ";iter2_cap=" << iter2_cap << ";a_Tj=" << fmt_double(a_Tj)
     << ";a_N1=" << fmt_double(a_N1) << ";a_N3=" << fmt_double(a_N3) << ";a_L1=" << fmt_double(a_L1)
     << ";a_L2=" << fmt_double(a_L2) << ";w_override=" << (w_override ? std::to_string(*w_override) : "none");
  return os.str();
}

std::string TesterParams::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : canonical()) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double partition_alpha(const BaseGraphProfile& profile) {
  const double h = static_cast<double>(profile.h());
  return 1.0 / (16.0 * static_cast<double>(profile.delta) * h * h);
}

std::size_t resolve_w(const BaseGraphProfile& profile, const TesterParams& params) {
  if (params.w_override) return *params.w_override;
  if (profile.w && profile.w->exact) return profile.w->value;
  throw ConfigError("W(H) is not known exactly for this base graph; supply an override (--W or --set W=...)");
}

namespace {

void check_common(std::size_t n, double eps, const BaseGraphProfile& profile, double c) {
  if (n == 0) throw ArgumentError("tester needs at least one vertex");
  if (!(eps > 0 && eps < 1)) throw ArgumentError("eps must lie in (0, 1)");
  if (!(c > 1)) throw ArgumentError("c must exceed 1");
  if (profile.delta == 0) throw ArgumentError("base graph must have at least one edge");
}

}  // namespace

AdaptivePlanSizes adaptive_sizes(std::size_t n, double eps, const BaseGraphProfile& profile, double c,
                                 const TesterParams& params) {
  check_common(n, eps, profile, c);
  params.validate();
  AdaptivePlanSizes s;
  const double delta = static_cast<double>(profile.delta);
  s.alpha = partition_alpha(profile);
  s.w = resolve_w(profile, params);
  s.stage1_iterations = ceil_count(params.a_iter1 * c);
  s.s_size = std::min(n, ceil_count(params.a_S * delta / (s.alpha * eps)));
  s.sbar_cap = ceil_count(c * delta / s.alpha);
  s.t_size = std::min(n, ceil_count(params.a_T * delta * delta / (s.alpha * eps)));
  const double iters = std::pow(params.a_iter2 * static_cast<double>(s.w) * c, static_cast<double>(s.w));
  s.stage2_iterations = iters >= static_cast<double>(params.iter2_cap) ? params.iter2_cap : ceil_count(iters);
  s.tj_size = std::min(n, ceil_count(params.a_Tj * delta / eps));
  return s;
}

std::size_t adaptive_query_bound(std::size_t n, const AdaptivePlanSizes& s) {
  const double stage1 = static_cast<double>(s.stage1_iterations) *
                        (static_cast<double>(s.s_size) +
                         static_cast<double>(std::min(s.sbar_cap, n)) * static_cast<double>(s.t_size));
  const double w = static_cast<double>(s.w);
  const double stage2 = static_cast<double>(s.stage2_iterations) * (w * (w - 1) / 2) * static_cast<double>(s.tj_size);
  const double total = stage1 + stage2;
  const double pairs = static_cast<double>(pair_count(n));
  return static_cast<std::size_t>(std::min(total, pairs));
}

NonAdaptivePlanSizes nonadaptive_sizes(std::size_t n, double eps, const BaseGraphProfile& profile, double c,
                                       const TesterParams& params) {
  check_common(n, eps, profile, c);
  params.validate();
  NonAdaptivePlanSizes s;
  const double delta = static_cast<double>(profile.delta);
  s.alpha = partition_alpha(profile);
  s.w = resolve_w(profile, params);
  const double e1 = 1.0 - 1.0 / (delta + 2.0);
  const double e3 = 1.0 - 1.0 / static_cast<double>(s.w);
  s.s1_size = std::min(n, ceil_count(params.a_N1 * std::pow(s.alpha * eps, -e1)));
  s.t_size = std::min(n, ceil_count(params.a_T * delta * delta / (s.alpha * eps)));
  s.s2_size = std::min(n, ceil_count(params.a_N3 * std::pow(delta * c * c * eps, -e3)));
  return s;
}

std::size_t nonadaptive_query_bound(std::size_t n, const NonAdaptivePlanSizes& s) {
  const std::size_t total = pair_count(s.s1_size) + s.s1_size * s.t_size + pair_count(s.s2_size);
  return std::min(total, pair_count(n));
}

std::vector<LowDegreeLevel> low_degree_levels(std::size_t n, double eps, double c, double beta,
                                              const TesterParams& params) {
  if (n == 0) throw ArgumentError("tester needs at least one vertex");
  if (!(eps > 0 && eps < 1)) throw ArgumentError("eps must lie in (0, 1)");
  if (!(c > 1)) throw ArgumentError("c must exceed 1");
  if (!(beta > 0 && beta <= 1)) throw ArgumentError("beta must lie in (0, 1]");
  params.validate();
  const double ce = c * eps;
  const std::size_t top = ce >= 1 ? 0 : ceil_count(std::log2(1.0 / ce));
  const double bound = ce * static_cast<double>(n);
  std::vector<LowDegreeLevel> levels;
  for (std::size_t j = 0; j <= top; ++j) {
    const double scale = std::ldexp(1.0, static_cast<int>(j));
    LowDegreeLevel L;
    L.level = j;
    L.samples = ceil_count(params.a_L1 * scale / beta * std::log(8.0 * static_cast<double>(j + 2)));
    L.probes = ceil_count(params.a_L2 / (scale * ce) * std::log(40.0 * static_cast<double>(L.samples)));
    L.threshold = std::max((1.0 + beta / 4.0) * bound, 0.75 * scale * bound);
    levels.push_back(L);
  }
  return levels;
}

std::string Verdict::evidence_kind() const {
  if (degree) return "degree-estimate";
  if (witness) return std::holds_alternative<PartitionabilityWitness>(*witness) ? "partitionability" : "induced-subgraph";
  return "none";
}

double combined_beta(const BaseGraphProfile& profile, double c) {
  const double delta = static_cast<double>(profile.delta);
  return 1.0 / (18.0 * c * delta * delta);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace bucl
