#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bucl {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Index of the unordered pair {u, v}, u != v, in a packed lower-triangular
/// bit array. Pairs of vertices below n occupy indices [0, n(n-1)/2).
inline std::size_t pair_index(Vertex u, Vertex v) noexcept {
  if (u > v) std::swap(u, v);
  return static_cast<std::size_t>(v) * (v - 1) / 2 + u;
}

inline std::size_t pair_count(std::size_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lives in a packed triangular bit array, so symmetry holds by
/// construction and the diagonal is not representable. Build instances with
/// GraphBuilder or the free constructors below.
class Graph {
 public:
  Graph() = default;

  static Graph empty(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  /// Unchecked: u and v must be below size(). Returns false for u == v.
  bool adjacent(Vertex u, Vertex v) const noexcept {
    if (u == v) return false;
    const std::size_t i = pair_index(u, v);
    return (bits_[i >> 6] >> (i & 63)) & 1u;
  }

  std::size_t degree(Vertex v) const noexcept { return degree_[v]; }
  std::size_t max_degree() const noexcept;

  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> degree_;
};

/// Single-owner mutable staging area for a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  /// Returns false if the edge was already present. Throws ArgumentError on
  /// self-loops and out-of-range endpoints.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  Graph build() &&;

 private:
  void check(Vertex u, Vertex v) const;

  std::size_t n_;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> degree_;
};

/// Group and part of one vertex. Single blow-ups use group 0 throughout.
struct PartLabel {
  std::uint32_t group = 0;
  std::uint32_t part = 0;
  friend bool operator==(const PartLabel&, const PartLabel&) = default;
};

struct Partitioning {
  std::vector<PartLabel> labels;  // one per vertex

  std::size_t group_count() const;
  friend bool operator==(const Partitioning&, const Partitioning&) = default;
};

struct BlowUp {
  Graph graph;
  Partitioning partitioning;
};

/// Strict construction: self-loops, out-of-range endpoints and duplicate
/// pairs (in either orientation) raise FormatError.
Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

/// Replaces vertex i of H by sizes[i] independent vertices; parts are laid
/// out consecutively in index order. Zero sizes are allowed.
BlowUp blow_up(const Graph& H, std::span<const std::size_t> sizes);

Graph disjoint_union(std::span<const Graph> parts);

/// Vertices of the result follow the ascending order of S.
Graph induced_subgraph(const Graph& G, std::span<const Vertex> S);

/// Components ordered by their smallest vertex; each component is sorted.
std::vector<std::vector<Vertex>> connected_components(const Graph& G);

/// |Γ(u) △ Γ(w)|.
std::size_t neighborhood_symdiff_size(const Graph& G, Vertex u, Vertex w);

/// Small base graph H with its derived parameters.
struct BaseGraphProfile {
  struct WValue {
    std::size_t value = 0;
    bool exact = false;
  };

  Graph H;
  std::size_t delta = 0;    // max degree of H
  std::size_t w_bound = 0;  // ceil(h^2 / 2) - 1, advisory search cap
  std::optional<WValue> w;

  std::size_t h() const noexcept { return H.size(); }
};

/// Profile with delta and w_bound filled in; W is left unset.
BaseGraphProfile make_profile(Graph H);

}  // namespace bucl
