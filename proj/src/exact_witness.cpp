#include <algorithm>
#include <set>
#include <string>

#include "bucl/errors.hpp"
#include "bucl/exact.hpp"

namespace bucl {

namespace {

constexpr std::size_t kMaxKeyVertices = 11;

void check_key_size(std::size_t n) {
  if (n > kMaxKeyVertices) throw CapacityError("small graph keys support at most 11 vertices");
}

// Adds a vertex n (the new last one) adjacent to the vertices in `mask`.
std::uint64_t extend_key(std::size_t n, std::uint64_t key, std::uint64_t mask) {
  for (std::size_t u = 0; u < n; ++u) {
    if ((mask >> u) & 1u) key |= std::uint64_t{1} << pair_index(static_cast<Vertex>(u), static_cast<Vertex>(n));
  }
  return key;
}

}  // namespace

std::uint64_t small_graph_key(const Graph& G) {
  check_key_size(G.size());
  std::uint64_t key = 0;
  for (const auto& e : G.edges()) key |= std::uint64_t{1} << pair_index(e.u, e.v);
  return key;
}

Graph graph_from_key(std::size_t n, std::uint64_t key) {
  check_key_size(n);
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if ((key >> pair_index(u, v)) & 1u) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

std::uint64_t canonical_key(const Graph& G) {
  const std::size_t n = G.size();
  check_key_size(n);
  if (n < 2) return 0;

  // Degree refinement: own degree, then the sorted degrees of the neighbors.
  std::vector<std::vector<std::size_t>> invariant(n);
  for (Vertex v = 0; v < n; ++v) {
    invariant[v].push_back(G.degree(v));
    std::vector<std::size_t> nd;
    for (Vertex u = 0; u < n; ++u) {
      if (G.adjacent(u, v)) nd.push_back(G.degree(u));
    }
    std::sort(nd.begin(), nd.end());
    invariant[v].insert(invariant[v].end(), nd.begin(), nd.end());
  }
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    if (invariant[a] != invariant[b]) return invariant[a] > invariant[b];
    return a < b;
  });
  std::vector<std::size_t> cell_start{0};
  for (std::size_t i = 1; i < n; ++i) {
    if (invariant[order[i]] != invariant[order[i - 1]]) cell_start.push_back(i);
  }
  cell_start.push_back(n);

  std::uint64_t best = 0;
  auto evaluate = [&] {
    std::uint64_t key = 0;
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if (G.adjacent(order[i], order[j])) key |= std::uint64_t{1} << pair_index(i, j);
      }
    }
    best = std::max(best, key);
  };
  auto recurse = [&](auto&& self, std::size_t cell) -> void {
    if (cell + 1 == cell_start.size()) {
      evaluate();
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(cell_start[cell]);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(cell_start[cell + 1]);
    std::sort(first, last);
    do {
      self(self, cell + 1);
    } while (std::next_permutation(first, last));
  };
  recurse(recurse, 0);
  return best;
}

std::vector<Graph> minimal_witnesses(const Graph& H, std::size_t n_max, std::size_t cap) {
  if (n_max > cap) {
    throw CapacityError("minimal_witnesses: n_max=" + std::to_string(n_max) + " exceeds cap " + std::to_string(cap));
  }
  check_key_size(n_max);
  std::vector<Graph> out;
  if (n_max < 2) return out;

  // Members of BUC(H) are closed under vertex deletion, so every member and
  // every minimal witness on s vertices extends some member on s-1 vertices.
  std::vector<std::uint64_t> members{0};  // canonical keys on s-1 vertices; K1 first
  for (std::size_t s = 2; s <= n_max; ++s) {
    std::set<std::uint64_t> seen;
    std::vector<std::uint64_t> next_members;
    std::vector<std::uint64_t> witnesses;
    for (const auto base : members) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (s - 1)); ++mask) {
        const Graph cand = graph_from_key(s, extend_key(s - 1, base, mask));
        const std::uint64_t canon = canonical_key(cand);
        if (!seen.insert(canon).second) continue;
        if (is_blowup_collection(cand, H)) {
          next_members.push_back(canon);
          continue;
        }
        if (connected_components(cand).size() != 1) continue;
        bool minimal = true;
        for (Vertex drop = 0; drop < s && minimal; ++drop) {
          std::vector<Vertex> keep;
          for (Vertex x = 0; x < s; ++x) {
            if (x != drop) keep.push_back(x);
          }
          minimal = is_blowup_collection(induced_subgraph(cand, keep), H).has_value();
        }
        if (minimal) witnesses.push_back(canon);
      }
    }
    std::sort(witnesses.begin(), witnesses.end());
    for (const auto key : witnesses) out.push_back(graph_from_key(s, key));
    std::sort(next_members.begin(), next_members.end());
    members = std::move(next_members);
  }
  return out;
}

WResult compute_W(const Graph& H, std::size_t n_max, std::size_t cap) {
  const BaseGraphProfile profile = make_profile(H);
  const std::size_t limit = std::min(n_max, cap);
  WResult r;
  for (const auto& w : minimal_witnesses(H, limit, cap)) r.value = std::max(r.value, w.size());
  r.exact = limit >= profile.w_bound && r.value <= profile.w_bound;
  return r;
}

BaseGraphProfile profile_with_w(Graph H, std::size_t n_max) {
  const WResult w = compute_W(H, n_max);
  BaseGraphProfile p = make_profile(std::move(H));
  p.w = BaseGraphProfile::WValue{w.value, w.exact};
  return p;
}

}  // namespace bucl
