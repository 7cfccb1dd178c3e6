#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "bucl/errors.hpp"
#include "bucl/exact.hpp"

namespace bucl {

namespace {

void check_cap(const char* what, std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw CapacityError(std::string(what) + ": n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

// Minimum number of pairs inside `vs` that disagree with a single blow-up
// labeling, over all h^|vs| labelings (branch and bound).
class LabelCost {
 public:
  LabelCost(const Graph& G, const Graph& H, std::vector<Vertex> vs)
      : G_(G), H_(H), vs_(std::move(vs)), labels_(vs_.size(), 0) {}

  std::size_t run() {
    best_ = std::numeric_limits<std::size_t>::max();
    if (vs_.size() <= 1) return 0;
    extend(0, 0);
    return best_;
  }

 private:
  void extend(std::size_t i, std::size_t cost) {
    if (cost >= best_) return;
    if (i == vs_.size()) {
      best_ = cost;
      return;
    }
    for (Vertex p = 0; p < H_.size(); ++p) {
      labels_[i] = p;
      std::size_t add = 0;
      for (std::size_t j = 0; j < i; ++j) {
        if (G_.adjacent(vs_[i], vs_[j]) != H_.adjacent(p, labels_[j])) ++add;
      }
      extend(i + 1, cost + add);
    }
  }

  const Graph& G_;
  const Graph& H_;
  std::vector<Vertex> vs_;
  std::vector<Vertex> labels_;
  std::size_t best_ = 0;
};

std::size_t floor_count(double x) { return x <= 0 ? 0 : static_cast<std::size_t>(std::floor(x + 1e-9)); }

// All graphs on n vertices in LD_D ∩ BUC(H), as small-graph keys. Cached
// per (n, D, H) since the composition sweep asks for the same set often.
const std::vector<std::uint64_t>& intersection_members(std::size_t n, std::size_t D, const Graph& H) {
  static std::mutex mutex;
  static std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::uint64_t>, std::vector<std::uint64_t>> cache;
  const auto key = std::make_tuple(n, D, H.size(), small_graph_key(H));
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::uint64_t> members;
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t k = 0; k < total; ++k) {
    const Graph g = graph_from_key(n, k);
    if (g.max_degree() > D) continue;
    if (is_blowup_collection(g, H)) members.push_back(k);
  }
  return cache.emplace(key, std::move(members)).first->second;
}

}  // namespace

std::size_t distance_to_buc(const Graph& G, const Graph& H, std::size_t cap) {
  const std::size_t n = G.size();
  check_cap("distance_to_buc", n, cap);
  if (n == 0) return 0;
  if (H.size() == 0) throw ArgumentError("distance_to_buc: H has no vertices");

  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<std::uint32_t> row(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) {
      if (G.adjacent(u, v)) row[v] |= 1u << u;
    }
  }

  // Best single-group cost of every vertex subset.
  std::vector<std::size_t> group_cost(full + 1, 0);
  for (std::size_t mask = 1; mask <= full; ++mask) {
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < n; ++v) {
      if ((mask >> v) & 1u) vs.push_back(v);
    }
    group_cost[mask] = LabelCost(G, H, std::move(vs)).run();
  }

  // Partition into groups: cross-group edges must all be deleted.
  std::vector<std::size_t> best(full + 1, std::numeric_limits<std::size_t>::max());
  best[0] = 0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const std::size_t low = mask & (~mask + 1);
    const std::size_t rest_all = mask ^ low;
    // Enumerate groups containing the lowest vertex of mask.
    for (std::size_t extra = rest_all;; extra = (extra - 1) & rest_all) {
      const std::size_t group = low | extra;
      const std::size_t rest = mask ^ group;
      std::size_t cut = 0;
      for (Vertex v = 0; v < n; ++v) {
        if ((group >> v) & 1u) cut += static_cast<std::size_t>(std::popcount(row[v] & rest));
      }
      best[mask] = std::min(best[mask], group_cost[group] + cut + best[rest]);
      if (extra == 0) break;
    }
  }
  return best[full];
}

std::size_t distance_to_ld(const Graph& G, std::size_t D, std::size_t cap) {
  const std::size_t n = G.size();
  check_cap("distance_to_ld", n, cap);
  if (G.max_degree() <= D) return 0;

  // |E| minus a maximum simple b-matching with b(v) = min(D, deg v). The
  // b-matching comes from a maximum matching on the standard gadget: b(v)
  // copies of v, and per edge e = {u, v} two nodes e_u - e_v with e_u joined
  // to every copy of u and e_v to every copy of v. Then
  // |max matching| = |E| + |max b-matching|.
  const auto edges = G.edges();
  std::vector<std::size_t> copy_base(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) copy_base[v + 1] = copy_base[v] + std::min(D, G.degree(v));
  const std::size_t copies = copy_base[n];
  const std::size_t nodes = copies + 2 * edges.size();

  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph g(nodes);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::size_t eu = copies + 2 * e;
    const std::size_t ev = eu + 1;
    boost::add_edge(eu, ev, g);
    for (std::size_t c = copy_base[edges[e].u]; c < copy_base[edges[e].u + 1]; ++c) boost::add_edge(c, eu, g);
    for (std::size_t c = copy_base[edges[e].v]; c < copy_base[edges[e].v + 1]; ++c) boost::add_edge(c, ev, g);
  }
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(nodes);
  boost::edmonds_maximum_cardinality_matching(g, &mate[0]);
  const std::size_t matching = boost::matching_size(g, &mate[0]);
  const std::size_t kept = matching - edges.size();
  return edges.size() - kept;
}

std::size_t distance_to_intersection(const Graph& G, const Graph& H, std::size_t D, std::size_t cap) {
  const std::size_t n = G.size();
  check_cap("distance_to_intersection", n, cap);
  check_cap("distance_to_intersection", n, 11);
  const std::uint64_t key = small_graph_key(G);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto m : intersection_members(n, D, H)) {
    best = std::min(best, static_cast<std::size_t>(std::popcount(m ^ key)));
  }
  return best;
}

CompositionCheck composition_check(const Graph& G, const Graph& H, double eps, double c, std::size_t cap) {
  const std::size_t n = G.size();
  check_cap("check_distance_composition", n, cap);
  if (!(eps > 0) || !(c > 0)) throw ArgumentError("check_distance_composition: eps and c must be positive");
  const double delta = static_cast<double>(H.max_degree());
  const double nn = static_cast<double>(n) * static_cast<double>(n);

  CompositionCheck r;
  r.degree_bound = floor_count(c * eps * static_cast<double>(n));
  r.dist_ld = distance_to_ld(G, r.degree_bound);
  r.dist_buc = distance_to_buc(G, H);
  r.ld_budget = delta > 0 ? eps * nn / (18.0 * c * delta * delta) : std::numeric_limits<double>::infinity();
  r.buc_budget = eps * nn / 3.0;
  r.total_budget = eps * nn;
  r.antecedent = static_cast<double>(r.dist_ld) <= r.ld_budget && static_cast<double>(r.dist_buc) <= r.buc_budget;
  if (r.antecedent) {
    r.dist_intersection = distance_to_intersection(G, H, r.degree_bound, cap);
    r.holds = static_cast<double>(*r.dist_intersection) <= r.total_budget;
  }
  return r;
}

bool check_distance_composition(const Graph& G, const Graph& H, double eps, double c, std::size_t cap) {
  return composition_check(G, H, eps, c, cap).holds;
}

}  // namespace bucl
