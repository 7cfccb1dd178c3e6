#include "bucl/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bucl/errors.hpp"

namespace bucl {

namespace {

std::vector<std::uint64_t> make_bits(std::size_t n) { return std::vector<std::uint64_t>((pair_count(n) + 63) / 64, 0); }

}  // namespace

Graph Graph::empty(std::size_t n) { return GraphBuilder(n).build(); }

std::size_t Graph::max_degree() const noexcept {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degree_[v]);
  for (Vertex u = 0; u < n_; ++u) {
    if (adjacent(u, v)) out.push_back(u);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex v = 1; v < n_; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (adjacent(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) : n_(n), bits_(make_bits(n)), degree_(n, 0) {}

void GraphBuilder::check(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) {
    throw ArgumentError("vertex out of range in pair {" + std::to_string(u) + "," + std::to_string(v) + "} for n=" +
                        std::to_string(n_));
  }
  if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u, v);
  const std::size_t i = pair_index(u, v);
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (bits_[i >> 6] & mask) return false;
  bits_[i >> 6] |= mask;
  ++degree_[u];
  ++degree_[v];
  ++m_;
  return true;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  check(u, v);
  const std::size_t i = pair_index(u, v);
  return (bits_[i >> 6] >> (i & 63)) & 1u;
}

Graph GraphBuilder::build() && {
  Graph g;
  g.n_ = n_;
  g.m_ = m_;
  g.bits_ = std::move(bits_);
  g.degree_ = std::move(degree_);
  n_ = 0;
  m_ = 0;
  return g;
}

std::size_t Partitioning::group_count() const {
  std::size_t k = 0;
  for (const auto& l : labels) k = std::max<std::size_t>(k, l.group + 1);
  return k;
}

Graph from_edge_list(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& e : edges) {
    if (e.u == e.v) throw FormatError("self-loop at vertex " + std::to_string(e.u));
    if (e.u >= n || e.v >= n) {
      throw FormatError("endpoint out of range in pair " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    if (!b.add_edge(e.u, e.v)) {
      throw FormatError("duplicate pair " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
  }
  return std::move(b).build();
}

BlowUp blow_up(const Graph& H, std::span<const std::size_t> sizes) {
  if (sizes.size() != H.size()) {
    throw ArgumentError("blow_up: expected " + std::to_string(H.size()) + " part sizes, got " +
                        std::to_string(sizes.size()));
  }
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  std::vector<std::size_t> first(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) first[i + 1] = first[i] + sizes[i];

  Partitioning cert;
  cert.labels.resize(n);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (std::size_t v = first[i]; v < first[i + 1]; ++v) cert.labels[v] = {0, static_cast<std::uint32_t>(i)};
  }

  GraphBuilder b(n);
  for (Vertex j = 1; j < H.size(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (!H.adjacent(i, j)) continue;
      for (std::size_t x = first[i]; x < first[i + 1]; ++x) {
        for (std::size_t y = first[j]; y < first[j + 1]; ++y) {
          b.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(y));
        }
      }
    }
  }
  return {std::move(b).build(), std::move(cert)};
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t n = 0;
  for (const auto& g : parts) n += g.size();
  GraphBuilder b(n);
  std::size_t offset = 0;
  for (const auto& g : parts) {
    for (const auto& e : g.edges()) {
      b.add_edge(static_cast<Vertex>(e.u + offset), static_cast<Vertex>(e.v + offset));
    }
    offset += g.size();
  }
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& G, std::span<const Vertex> S) {
  std::vector<Vertex> vs(S.begin(), S.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  if (!vs.empty() && vs.back() >= G.size()) {
    throw ArgumentError("induced_subgraph: vertex " + std::to_string(vs.back()) + " out of range");
  }
  GraphBuilder b(vs.size());
  for (std::size_t j = 1; j < vs.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (G.adjacent(vs[i], vs[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return std::move(b).build();
}

std::vector<std::vector<Vertex>> connected_components(const Graph& G) {
  const std::size_t n = G.size();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      if (G.degree(x) == 0) continue;
      for (Vertex y = 0; y < n; ++y) {
        if (!seen[y] && G.adjacent(x, y)) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t neighborhood_symdiff_size(const Graph& G, Vertex u, Vertex w) {
  if (u >= G.size() || w >= G.size()) throw ArgumentError("neighborhood_symdiff_size: vertex out of range");
  if (u == w) return 0;
  std::size_t count = 0;
  for (Vertex x = 0; x < G.size(); ++x) {
    if (G.adjacent(u, x) != G.adjacent(w, x)) ++count;
  }
  return count;
}

BaseGraphProfile make_profile(Graph H) {
  BaseGraphProfile p;
  p.delta = H.max_degree();
  const std::size_t h = H.size();
  const std::size_t half_sq = (h * h + 1) / 2;  // ceil(h^2 / 2)
  p.w_bound = half_sq == 0 ? 0 : half_sq - 1;
  p.H = std::move(H);
  return p;
}

}  // namespace bucl
