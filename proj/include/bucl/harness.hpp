#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bucl/graph.hpp"
#include "bucl/testers.hpp"

namespace bucl {

enum class TesterKind { adaptive, nonadaptive, combined_adaptive, combined_nonadaptive, low_degree };

/// "adaptive", "nonadaptive", "combined-adaptive", "combined-nonadaptive",
/// "low-degree".
std::string to_string(TesterKind kind);
TesterKind parse_tester_kind(std::string_view name);

enum class Workload { member, far_cycle, high_degree, planted, fixed };

/// "member", "far-cycle", "high-degree", "planted", "fixed".
std::string to_string(Workload w);
Workload parse_workload(std::string_view name);

struct TrialConfig {
  TesterKind tester = TesterKind::adaptive;
  Workload workload = Workload::member;
  std::string h_label;      // written to the H column
  BaseGraphProfile profile;  // needs W for BUC testers
  std::size_t n = 0;
  std::vector<double> eps;
  double c = 2;
  std::size_t trials = 1;
  std::uint64_t base_seed = 0;
  TesterParams params;
  /// N = round(matched_k / eps) per eps instead of a fixed N.
  std::optional<double> matched_k;
  std::size_t cycle_t = 4;       // far-cycle: groups are blow-ups of C_{t+1}
  std::size_t planted = 1;       // planted: cross-group edges added to a member
  std::optional<Graph> fixed;    // fixed: the instance used for every trial
  double beta = 0.25;            // low-degree tester only
  std::size_t workers = 1;
  bool timing = true;            // false writes wall_ms = 0 for byte-stable output
};

struct ExperimentRecord {
  std::string tester;
  std::string h;
  std::size_t n = 0;
  double eps = 0;
  double c = 0;
  std::string params_fp;
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  std::string verdict;   // "accept" or "reject"
  std::string evidence;  // Verdict::evidence_kind()
  std::size_t distinct_queries = 0;
  std::int64_t wall_ms = 0;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

/// Instance size used for one eps of the grid.
std::size_t instance_size(const TrialConfig& config, double eps);

/// The instance of one trial; a pure function of (config, eps, seed).
Graph make_instance(const TrialConfig& config, double eps, std::uint64_t seed);

/// One record per (eps, trial), ordered by eps index then trial. Trial seeds
/// are base_seed + trial. Every BUC-stage rejection is checked with
/// verify_evidence; a failing certificate raises std::logic_error.
std::vector<ExperimentRecord> run_trials(const TrialConfig& config);

/// Runs a single tester on G and checks any BUC-stage certificate.
Verdict run_tester(const TrialConfig& config, const Graph& G, double eps, std::uint64_t seed);

inline constexpr const char* kCsvHeader =
    "tester,H,N,eps,c,params_fp,seed,trial,verdict,evidence,distinct_queries,wall_ms";

void write_csv(std::ostream& out, std::span<const ExperimentRecord> records);
/// Throws FormatError on a missing or different header or a malformed row.
std::vector<ExperimentRecord> read_csv(std::istream& in);

struct AcceptanceEstimate {
  std::size_t trials = 0;
  std::size_t accepts = 0;
  double p = 0;
  double lo = 0;
  double hi = 0;
};

/// Wilson score interval at z = 1.96.
AcceptanceEstimate wilson(std::size_t accepts, std::size_t trials);
/// Throws ArgumentError on an empty cell.
AcceptanceEstimate estimate_acceptance(std::span<const ExperimentRecord> cell);

struct SlopeFit {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // sum of squared residuals in log space
};

/// Least-squares line of log(queries) against log(1/eps). Needs at least two
/// distinct eps values and positive query counts.
SlopeFit fit_slope(std::span<const std::pair<double, double>> points);

double median(std::vector<double> values);

/// (eps, median distinct_queries) per eps value, in first-seen order.
std::vector<std::pair<double, double>> median_queries(std::span<const ExperimentRecord> records);

}  // namespace bucl
