#include "support.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace bucl::testing {

Graph cycle(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, static_cast<Vertex>((i + 1) % n));
  return std::move(b).build();
}

Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) b.add_edge(i, j);
  }
  return std::move(b).build();
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  GraphBuilder g(a + b);
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) g.add_edge(i, static_cast<Vertex>(a + j));
  }
  return std::move(g).build();
}

Graph star(std::size_t k) {
  GraphBuilder b(k + 1);
  for (Vertex i = 1; i <= k; ++i) b.add_edge(0, i);
  return std::move(b).build();
}

Graph from_pairs(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  GraphBuilder b(n);
  for (const auto& [u, v] : pairs) b.add_edge(u, v);
  return std::move(b).build();
}

std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) slots.emplace_back(u, v);
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    GraphBuilder b(n);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1u) b.add_edge(slots[i].first, slots[i].second);
    }
    out.push_back(std::move(b).build());
  }
  return out;
}

Graph relabel(const Graph& G, const std::vector<Vertex>& perm) {
  GraphBuilder b(G.size());
  for (const auto& e : G.edges()) b.add_edge(perm[e.u], perm[e.v]);
  return std::move(b).build();
}

namespace {

// Advances a mixed-radix counter; false once it wraps around.
bool next_assignment(std::vector<std::size_t>& digits, std::size_t radix) {
  for (auto& d : digits) {
    if (++d < radix) return true;
    d = 0;
  }
  return false;
}

}  // namespace

bool exhaustive_buc_labeling(const Graph& G, const Graph& H) {
  const std::size_t n = G.size();
  if (n == 0) return true;
  if (n > 8) throw std::invalid_argument("exhaustive_buc_labeling: n too large");
  // Groups as a restricted-growth string; cross-group pairs must be
  // non-adjacent and each group must admit a single blow-up labeling.
  std::vector<std::size_t> group(n, 0);
  auto check = [&] {
    for (Vertex v = 1; v < n; ++v) {
      for (Vertex u = 0; u < v; ++u) {
        if (group[u] != group[v] && G.adjacent(u, v)) return false;
      }
    }
    const std::size_t groups = *std::max_element(group.begin(), group.end()) + 1;
    for (std::size_t g = 0; g < groups; ++g) {
      std::vector<Vertex> members;
      for (Vertex v = 0; v < n; ++v) {
        if (group[v] == g) members.push_back(v);
      }
      if (!exhaustive_blowup_labeling(induced_subgraph(G, members), H)) return false;
    }
    return true;
  };
  for (;;) {
    if (check()) return true;
    // Next restricted-growth string: group[i] <= 1 + max(group[0..i-1]).
    std::size_t i = n;
    while (i-- > 1) {
      const std::size_t prefix_max = *std::max_element(group.begin(), group.begin() + static_cast<std::ptrdiff_t>(i));
      if (group[i] <= prefix_max) {
        ++group[i];
        std::fill(group.begin() + static_cast<std::ptrdiff_t>(i) + 1, group.end(), 0);
        break;
      }
    }
    if (i == 0) return false;
  }
}

bool exhaustive_blowup_labeling(const Graph& G, const Graph& H) {
  const std::size_t n = G.size();
  if (n == 0) return true;
  std::vector<std::size_t> label(n, 0);
  do {
    bool ok = true;
    for (Vertex v = 1; v < n && ok; ++v) {
      for (Vertex u = 0; u < v && ok; ++u) {
        ok = H.adjacent(static_cast<Vertex>(label[u]), static_cast<Vertex>(label[v])) == G.adjacent(u, v);
      }
    }
    if (ok) return true;
  } while (next_assignment(label, H.size()));
  return false;
}

std::size_t exhaustive_distance_to_ld(const Graph& G, std::size_t D) {
  const auto edges = G.edges();
  if (edges.size() > 20) throw std::invalid_argument("exhaustive_distance_to_ld: too many edges");
  std::size_t best_kept = 0;
  for (std::uint32_t keep = 0; keep < (1u << edges.size()); ++keep) {
    const auto kept = static_cast<std::size_t>(std::popcount(keep));
    if (kept <= best_kept) continue;
    std::vector<std::size_t> deg(G.size(), 0);
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if ((keep >> i) & 1u) ok = ++deg[edges[i].u] <= D && ++deg[edges[i].v] <= D;
    }
    if (ok) best_kept = kept;
  }
  return edges.size() - best_kept;
}

std::size_t exhaustive_distance_to_buc(const Graph& G, const Graph& H) {
  const std::size_t n = G.size();
  if (n > 6) throw std::invalid_argument("exhaustive_distance_to_buc: n too large");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& cand : all_graphs(n)) {
    std::size_t d = 0;
    for (Vertex v = 1; v < n; ++v) {
      for (Vertex u = 0; u < v; ++u) d += G.adjacent(u, v) != cand.adjacent(u, v);
    }
    if (d < best && exhaustive_buc_labeling(cand, H)) best = d;
  }
  return best;
}

}  // namespace bucl::testing
