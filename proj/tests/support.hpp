#pragma once

#include <cstdint>
#include <vector>

#include "bucl/graph.hpp"

namespace bucl::testing {

Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Center 0 joined to leaves 1..k.
Graph star(std::size_t k);
Graph from_pairs(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs);

/// Every labeled graph on n vertices (2^C(n,2) of them).
std::vector<Graph> all_graphs(std::size_t n);

/// Relabels G by the permutation: vertex v becomes perm[v].
Graph relabel(const Graph& G, const std::vector<Vertex>& perm);

/// Independent oracle: is there a (group, part) labeling of G that is a
/// blow-up collection of H? Tries every set partition into groups and every
/// part assignment inside each group. Only for tiny n.
bool exhaustive_buc_labeling(const Graph& G, const Graph& H);

/// Independent oracle: single-group blow-up labelings (h^n assignments).
bool exhaustive_blowup_labeling(const Graph& G, const Graph& H);

/// Independent oracle: minimum deletions to reach max degree D by trying
/// every edge subset. |E| <= 20.
std::size_t exhaustive_distance_to_ld(const Graph& G, std::size_t D);

/// Independent oracle: minimum edits to reach BUC(H), over all graphs on the
/// same vertex set, membership by exhaustive labeling. n <= 6.
std::size_t exhaustive_distance_to_buc(const Graph& G, const Graph& H);

}  // namespace bucl::testing
