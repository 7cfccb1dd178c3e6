#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "bucl/graph.hpp"

namespace bucl {

/// Default size caps for the exponential oracles.
struct ExactCaps {
  static constexpr std::size_t bruteforce_membership = 8;
  static constexpr std::size_t witness_enumeration = 7;
  static constexpr std::size_t buc_distance = 9;
  static constexpr std::size_t ld_distance = 40;
  static constexpr std::size_t intersection_distance = 6;
};

/// Vertices grouped by identical open neighborhoods.
struct QuotientGraph {
  std::vector<std::uint32_t> class_of;  // per vertex
  std::vector<std::vector<Vertex>> classes;
  Graph adjacency;  // one vertex per class
};

QuotientGraph twin_quotient(const Graph& G);

/// Edge-by-edge check of a blow-up certificate (group labels are ignored).
bool validates_blowup(const Graph& G, const Graph& H, const Partitioning& p);
/// Edge-by-edge check of a blow-up-collection certificate.
bool validates_blowup_collection(const Graph& G, const Graph& H, const Partitioning& p);

/// Certificate iff G is a blow-up of H. Quotient by twin classes, then an
/// induced embedding of the quotient into H by backtracking.
std::optional<Partitioning> is_blowup(const Graph& G, const Graph& H);

/// Certificate iff every connected component is a blow-up of H; the group
/// id of a vertex is the index of its component.
std::optional<Partitioning> is_blowup_collection(const Graph& G, const Graph& H);

/// Exhaustive (group, part) labeling search, pruned pair by pair. Kept
/// independent of the quotient route so the two can cross-check.
std::optional<Partitioning> buc_membership_bruteforce(const Graph& G, const Graph& H,
                                                      std::size_t cap = ExactCaps::bruteforce_membership);

/// Center v, fan u_0..u_Δ in Γ(v), and for each i < j a vertex w adjacent to
/// exactly one of u_i, u_j.
struct PartitionabilityWitness {
  struct Distinguisher {
    std::uint32_t i;
    std::uint32_t j;
    Vertex w;
  };
  Vertex center = 0;
  std::vector<Vertex> fan;
  std::vector<Distinguisher> distinguishers;
};

/// A vertex set whose induced subgraph is outside BUC(H).
struct InducedSubgraphWitness {
  std::vector<Vertex> vertices;
};

using WitnessReport = std::variant<PartitionabilityWitness, InducedSubgraphWitness>;

/// True iff the report is sound against the true graph G.
bool verify_evidence(const Graph& G, const WitnessReport& report, const Graph& H, std::size_t delta);

/// Connected graphs on at most n_max vertices, one per isomorphism class,
/// that are outside BUC(H) while every one-vertex deletion is inside.
/// Ordered by vertex count, then by canonical key.
std::vector<Graph> minimal_witnesses(const Graph& H, std::size_t n_max,
                                     std::size_t cap = ExactCaps::witness_enumeration);

struct WResult {
  std::size_t value = 0;
  bool exact = false;
};

/// Largest minimal witness found with a search limit of min(n_max, cap).
/// `exact` is set when the limit reaches ceil(h^2/2)-1 and nothing larger
/// than that bound was found; otherwise W must be supplied externally.
WResult compute_W(const Graph& H, std::size_t n_max, std::size_t cap = ExactCaps::witness_enumeration);

/// make_profile plus W from compute_W.
BaseGraphProfile profile_with_w(Graph H, std::size_t n_max = ExactCaps::witness_enumeration);

/// Minimum number of unordered-pair edits taking G into BUC(H).
std::size_t distance_to_buc(const Graph& G, const Graph& H, std::size_t cap = ExactCaps::buc_distance);

/// Minimum number of edge deletions leaving every degree at most D.
std::size_t distance_to_ld(const Graph& G, std::size_t D, std::size_t cap = ExactCaps::ld_distance);

/// Representatives u_1..u_k (at most k) in Γ(v) whose similarity classes
/// C(u) = {w in Γ(v) : |Γ(w) △ Γ(u)| < threshold} cover at least
/// |Γ(v)| - threshold neighbors; nullopt if no such choice exists.
std::optional<std::vector<Vertex>> is_partitionable(const Graph& G, Vertex v, std::size_t k, std::size_t threshold);

/// Minimum number of edits taking G into LD_D ∩ BUC(H), by exhaustive search
/// over all graphs on the same vertex set.
std::size_t distance_to_intersection(const Graph& G, const Graph& H, std::size_t D,
                                     std::size_t cap = ExactCaps::intersection_distance);

struct CompositionCheck {
  std::size_t degree_bound = 0;  // floor(c * eps * n)
  std::size_t dist_ld = 0;
  std::size_t dist_buc = 0;
  double ld_budget = 0;   // eps n^2 / (18 c Δ^2)
  double buc_budget = 0;  // eps n^2 / 3
  double total_budget = 0;  // eps n^2
  bool antecedent = false;
  std::optional<std::size_t> dist_intersection;  // computed only under the antecedent
  bool holds = true;
};

/// Closeness to LD and to BUC(H) at the composed tolerances implies
/// eps-closeness to the intersection.
CompositionCheck composition_check(const Graph& G, const Graph& H, double eps, double c,
                                   std::size_t cap = ExactCaps::intersection_distance);
bool check_distance_composition(const Graph& G, const Graph& H, double eps, double c,
                                std::size_t cap = ExactCaps::intersection_distance);

/// Packs a graph on at most 11 vertices into the low bits of a word, pair
/// {u, v} at bit pair_index(u, v).
std::uint64_t small_graph_key(const Graph& G);
Graph graph_from_key(std::size_t n, std::uint64_t key);
/// Canonical key: maximum key over all relabelings that respect a degree
/// refinement. Equal for isomorphic graphs.
std::uint64_t canonical_key(const Graph& G);

}  // namespace bucl
