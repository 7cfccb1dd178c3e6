#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bucl/exact.hpp"
#include "bucl/graph.hpp"
#include "bucl/oracle.hpp"

namespace bucl {

/// Every hidden constant of the testers. Multipliers must be at least 1.
struct TesterParams {
  double a_iter1 = 12;  // stage-1 iterations ceil(a_iter1 * c)
  double a_S = 2;       // |S| = ceil(a_S * Δ / (α ε))
  double a_T = 2;       // |T| = ceil(a_T * Δ² / (α ε))
  double a_iter2 = 4;   // stage-2 iterations min(ceil((a_iter2 W c)^W), iter2_cap)
  std::size_t iter2_cap = 2000;
  double a_Tj = 2;   // |T_j| = ceil(a_Tj * Δ / ε)
  double a_N1 = 2;   // |S1| = ceil(a_N1 * (α ε)^-(1 - 1/(Δ+2)))
  double a_N3 = 8;   // |S2| = ceil(a_N3 * (Δ c² ε)^-(1 - 1/W))
  double a_L1 = 3;   // low-degree vertex samples per level
  double a_L2 = 16;  // low-degree probes per sampled vertex
  std::optional<std::size_t> w_override;

  /// Throws ConfigError on a multiplier below 1 or a zero iteration cap.
  void validate() const;
  /// Applies a `key=value` override; throws ConfigError on unknown keys.
  void set(std::string_view key, std::string_view value);
  /// Stable `key=value;...` rendering of every field.
  std::string canonical() const;
  /// 16 hex digits of FNV-1a over canonical().
  std::string fingerprint() const;
};

/// α = 1 / (16 Δ h²).
double partition_alpha(const BaseGraphProfile& profile);

/// W from the override, else from an exact profile value.
std::size_t resolve_w(const BaseGraphProfile& profile, const TesterParams& params);

struct AdaptivePlanSizes {
  double alpha = 0;
  std::size_t stage1_iterations = 0;
  std::size_t s_size = 0;  // capped at N
  std::size_t sbar_cap = 0;
  std::size_t t_size = 0;  // capped at N
  std::size_t stage2_iterations = 0;
  std::size_t tj_size = 0;  // capped at N
  std::size_t w = 0;
};

AdaptivePlanSizes adaptive_sizes(std::size_t n, double eps, const BaseGraphProfile& profile, double c,
                                 const TesterParams& params);

/// Worst-case distinct queries of adaptive_buc_test for these sizes: every
/// stage-1 iteration probes v×S and Ō×T, every stage-2 iteration probes
/// U×T_j for |U| = 1..W-1.
std::size_t adaptive_query_bound(std::size_t n, const AdaptivePlanSizes& s);

struct NonAdaptivePlanSizes {
  double alpha = 0;
  std::size_t s1_size = 0;
  std::size_t t_size = 0;
  std::size_t s2_size = 0;
  std::size_t w = 0;
};

NonAdaptivePlanSizes nonadaptive_sizes(std::size_t n, double eps, const BaseGraphProfile& profile, double c,
                                       const TesterParams& params);

/// C(|S1|,2) + |S1||T| + C(|S2|,2), capped at C(N,2).
std::size_t nonadaptive_query_bound(std::size_t n, const NonAdaptivePlanSizes& s);

struct LowDegreeLevel {
  std::size_t level = 0;
  std::size_t samples = 0;  // nominal s_j, before capping at N
  std::size_t probes = 0;   // nominal m_j
  double threshold = 0;
};

std::vector<LowDegreeLevel> low_degree_levels(std::size_t n, double eps, double c, double beta,
                                              const TesterParams& params);

enum class Decision { accept, reject };

/// Statistical evidence from the degree tester; not a certificate.
struct DegreeEstimateRecord {
  std::size_t level = 0;
  Vertex vertex = 0;
  std::size_t probes = 0;
  std::size_t hits = 0;
  double estimate = 0;
  double threshold = 0;
};

struct Verdict {
  Decision decision = Decision::accept;
  std::optional<WitnessReport> witness;
  std::optional<DegreeEstimateRecord> degree;
  QueryLedger ledger;

  bool rejected() const noexcept { return decision == Decision::reject; }
  /// "none", "partitionability", "induced-subgraph" or "degree-estimate".
  std::string evidence_kind() const;
};

/// Multi-scale non-adaptive degree tester. Accepts graphs of maximum degree
/// c·eps·N with probability at least 2/3 and rejects graphs beta·eps-far from
/// that with probability at least 2/3 (two-sided error).
Verdict low_degree_test(NonAdaptivePlan& plan, double eps, double c, double beta, const TesterParams& params);

/// Adaptive BUC(H) tester. Stage 1 looks for a vertex whose sampled
/// neighbors show Δ+1 pairwise-distinct neighborhoods; stage 2 grows random
/// connected vertex sets of size W and checks them against BUC(H). Both
/// rejections carry a certificate, so members are always accepted.
Verdict adaptive_buc_test(AdaptiveSession& session, double eps, const BaseGraphProfile& profile, double c,
                          const TesterParams& params);

/// Non-adaptive BUC(H) tester: one committed plan of S1×S1, S1×T and S2×S2.
Verdict nonadaptive_buc_test(NonAdaptivePlan& plan, double eps, const BaseGraphProfile& profile, double c,
                             const TesterParams& params);

enum class Variant { adaptive, nonadaptive };

/// Degree stage with beta = 1/(18 c Δ²); on acceptance the BUC tester at
/// tolerance eps/3. The ledger is the union of both stages.
Verdict combined_test(Variant variant, const Graph& G, double eps, const BaseGraphProfile& profile, double c,
                      const TesterParams& params, std::uint64_t seed);

/// beta used by combined_test.
double combined_beta(const BaseGraphProfile& profile, double c);

/// Deterministic stream splitting for derived seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace bucl
