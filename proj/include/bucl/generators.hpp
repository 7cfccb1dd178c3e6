#pragma once

#include <cstdint>
#include <span>

#include "bucl/graph.hpp"

namespace bucl {

/// A generated member together with the certificate it was built from.
struct GeneratedMember {
  Graph graph;
  Partitioning certificate;
};

/// A member of BUC(H) ∩ LD_{c·eps}. Groups of h parts with part sizes drawn
/// uniformly from [1, floor(c·eps·N/(Δ+1))]; the last part of a group takes
/// what is left, and a final group with fewer than h vertices keeps them all
/// in part 0. Vertex labels are randomly permuted.
GeneratedMember gen_member(const Graph& H, std::size_t n, double eps, double c, std::uint64_t seed);

/// Groups that are blow-ups of C_{t+1} with parts of size max(1, round(eps·N)),
/// packed greedily; leftover vertices are isolated. Labels are permuted.
Graph gen_far_cycle_mismatch(std::size_t t, std::size_t n, double eps, std::uint64_t seed);

/// The base graph plus k distinct edges between different groups of the
/// certificate, chosen uniformly among such non-edges.
Graph gen_planted_edges(const Graph& base, const Partitioning& certificate, std::size_t k, std::uint64_t seed);

/// Disjoint cliques of size ceil(4·c·eps·N)+1; leftover vertices are spread
/// round-robin over the cliques. Labels are permuted.
Graph gen_high_degree(std::size_t n, double eps, double c, std::uint64_t seed);

/// Σ_v max(0, deg(v) − D) / 2, a lower bound on the edge deletions needed to
/// reach maximum degree D.
double ld_excess_lower_bound(const Graph& G, std::size_t D);

}  // namespace bucl
