#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bucl/errors.hpp"
#include "bucl/exact.hpp"

namespace bucl {

namespace {

using Row = std::vector<std::uint64_t>;

Row neighborhood_row(const Graph& G, Vertex v) {
  Row row((G.size() + 63) / 64, 0);
  for (Vertex u = 0; u < G.size(); ++u) {
    if (G.adjacent(u, v)) row[u >> 6] |= std::uint64_t{1} << (u & 63);
  }
  return row;
}

// Injective map from quotient classes into H preserving adjacency and
// non-adjacency.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& Q, const Graph& H) : Q_(Q), H_(H), map_(Q.size(), 0), used_(H.size(), 0) {
    order_.resize(Q.size());
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return Q.degree(a) > Q.degree(b); });
  }

  std::optional<std::vector<Vertex>> run() {
    if (Q_.size() > H_.size()) return std::nullopt;
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex c = order_[depth];
    for (Vertex x = 0; x < H_.size(); ++x) {
      if (used_[x] || H_.degree(x) < Q_.degree(c)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const Vertex prev = order_[d];
        ok = Q_.adjacent(c, prev) == H_.adjacent(x, map_[prev]);
      }
      if (!ok) continue;
      map_[c] = x;
      used_[x] = 1;
      if (extend(depth + 1)) return true;
      used_[x] = 0;
    }
    return false;
  }

  const Graph& Q_;
  const Graph& H_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

// Restricted-growth group labels and per-vertex parts, checked against every
// earlier vertex as soon as they are assigned.
class LabelingSearch {
 public:
  LabelingSearch(const Graph& G, const Graph& H) : G_(G), H_(H), labels_(G.size()) {}

  std::optional<Partitioning> run() {
    if (G_.size() == 0) return Partitioning{};
    if (H_.size() == 0) return std::nullopt;
    if (extend(0, 0)) return Partitioning{labels_};
    return std::nullopt;
  }

 private:
  bool consistent(Vertex v) const {
    const PartLabel lv = labels_[v];
    for (Vertex u = 0; u < v; ++u) {
      const PartLabel lu = labels_[u];
      const bool edge = G_.adjacent(u, v);
      if (lu.group != lv.group) {
        if (edge) return false;
      } else if (edge != H_.adjacent(lu.part, lv.part)) {
        return false;
      }
    }
    return true;
  }

  bool extend(Vertex v, std::uint32_t groups_used) {
    if (v == G_.size()) return true;
    for (std::uint32_t g = 0; g <= groups_used; ++g) {
      for (std::uint32_t p = 0; p < H_.size(); ++p) {
        labels_[v] = {g, p};
        if (consistent(v) && extend(v + 1, std::max(groups_used, g + 1))) return true;
      }
    }
    return false;
  }

  const Graph& G_;
  const Graph& H_;
  std::vector<PartLabel> labels_;
};

}  // namespace

QuotientGraph twin_quotient(const Graph& G) {
  QuotientGraph q;
  q.class_of.resize(G.size());
  std::map<Row, std::uint32_t> index;
  for (Vertex v = 0; v < G.size(); ++v) {
    auto [it, inserted] = index.try_emplace(neighborhood_row(G, v), static_cast<std::uint32_t>(q.classes.size()));
    if (inserted) q.classes.emplace_back();
    q.class_of[v] = it->second;
    q.classes[it->second].push_back(v);
  }
  GraphBuilder b(q.classes.size());
  for (std::size_t j = 1; j < q.classes.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (G.adjacent(q.classes[i].front(), q.classes[j].front())) {
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  q.adjacency = std::move(b).build();
  // Twins share neighborhoods, so cross pairs agree and classes are
  // independent; a violation means the grouping above is broken.
  for (Vertex v = 1; v < G.size(); ++v) {
    for (Vertex u = 0; u < v; ++u) {
      const auto cu = q.class_of[u];
      const auto cv = q.class_of[v];
      const bool expected = cu != cv && q.adjacency.adjacent(cu, cv);
      if (G.adjacent(u, v) != expected) throw std::logic_error("twin quotient is not well defined");
    }
  }
  return q;
}

bool validates_blowup(const Graph& G, const Graph& H, const Partitioning& p) {
  if (p.labels.size() != G.size()) return false;
  for (const auto& l : p.labels) {
    if (l.part >= H.size()) return false;
  }
  for (Vertex v = 1; v < G.size(); ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (G.adjacent(u, v) != H.adjacent(p.labels[u].part, p.labels[v].part)) return false;
    }
  }
  return true;
}

bool validates_blowup_collection(const Graph& G, const Graph& H, const Partitioning& p) {
  if (p.labels.size() != G.size()) return false;
  for (const auto& l : p.labels) {
    if (l.part >= H.size()) return false;
  }
  for (Vertex v = 1; v < G.size(); ++v) {
    for (Vertex u = 0; u < v; ++u) {
      const auto& lu = p.labels[u];
      const auto& lv = p.labels[v];
      const bool expected = lu.group == lv.group && H.adjacent(lu.part, lv.part);
      if (G.adjacent(u, v) != expected) return false;
    }
  }
  return true;
}

std::optional<Partitioning> is_blowup(const Graph& G, const Graph& H) {
  if (G.size() == 0) return Partitioning{};
  if (H.size() == 0) return std::nullopt;
  const QuotientGraph q = twin_quotient(G);
  const auto map = EmbeddingSearch(q.adjacency, H).run();
  if (!map) return std::nullopt;
  // Spread each class over unused twins of its image in H, so that a blow-up
  // with singleton parts is reported as such.
  std::vector<char> used(H.size(), 0);
  for (const Vertex x : *map) used[x] = 1;
  const auto h_rows = [&] {
    std::vector<Row> rows;
    for (Vertex x = 0; x < H.size(); ++x) rows.push_back(neighborhood_row(H, x));
    return rows;
  }();
  Partitioning cert;
  cert.labels.resize(G.size());
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    const Vertex image = (*map)[c];
    Vertex next = 0;
    for (std::size_t i = 0; i < q.classes[c].size(); ++i) {
      Vertex part = image;
      if (i > 0) {
        while (next < H.size() && (used[next] || h_rows[next] != h_rows[image])) ++next;
        if (next < H.size()) {
          part = next;
          used[next] = 1;
        }
      }
      cert.labels[q.classes[c][i]] = {0, part};
    }
  }
  if (!validates_blowup(G, H, cert)) throw std::logic_error("is_blowup produced an invalid certificate");
  return cert;
}

std::optional<Partitioning> is_blowup_collection(const Graph& G, const Graph& H) {
  Partitioning cert;
  cert.labels.resize(G.size());
  const auto comps = connected_components(G);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& comp = comps[c];
    std::optional<Partitioning> sub;
    if (comp.size() == 1) {
      if (H.size() == 0) return std::nullopt;
      sub = Partitioning{{PartLabel{0, 0}}};
    } else {
      sub = is_blowup(induced_subgraph(G, comp), H);
      if (!sub) return std::nullopt;
    }
    for (std::size_t i = 0; i < comp.size(); ++i) {
      cert.labels[comp[i]] = {static_cast<std::uint32_t>(c), sub->labels[i].part};
    }
  }
  if (!validates_blowup_collection(G, H, cert)) {
    throw std::logic_error("is_blowup_collection produced an invalid certificate");
  }
  return cert;
}

std::optional<Partitioning> buc_membership_bruteforce(const Graph& G, const Graph& H, std::size_t cap) {
  if (G.size() > cap) {
    throw CapacityError("buc_membership_bruteforce: n=" + std::to_string(G.size()) + " exceeds cap " +
                        std::to_string(cap));
  }
  return LabelingSearch(G, H).run();
}

bool verify_evidence(const Graph& G, const WitnessReport& report, const Graph& H, std::size_t delta) {
  const std::size_t n = G.size();
  if (const auto* fan = std::get_if<PartitionabilityWitness>(&report)) {
    if (fan->center >= n || fan->fan.size() != delta + 1) return false;
    for (std::size_t i = 0; i < fan->fan.size(); ++i) {
      const Vertex u = fan->fan[i];
      if (u >= n || !G.adjacent(fan->center, u)) return false;
      for (std::size_t j = 0; j < i; ++j) {
        if (fan->fan[j] == u) return false;
      }
    }
    const std::size_t k = fan->fan.size();
    std::vector<char> covered(k * k, 0);
    for (const auto& d : fan->distinguishers) {
      if (d.i >= k || d.j >= k || d.i == d.j || d.w >= n) return false;
      const bool a = G.adjacent(d.w, fan->fan[d.i]);
      const bool b = G.adjacent(d.w, fan->fan[d.j]);
      if (a == b) return false;
      covered[std::min(d.i, d.j) * k + std::max(d.i, d.j)] = 1;
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!covered[i * k + j]) return false;
      }
    }
    return true;
  }
  const auto& induced = std::get<InducedSubgraphWitness>(report);
  std::vector<Vertex> U = induced.vertices;
  std::sort(U.begin(), U.end());
  if (std::adjacent_find(U.begin(), U.end()) != U.end()) return false;
  if (!U.empty() && U.back() >= n) return false;
  return !is_blowup_collection(induced_subgraph(G, U), H).has_value();
}

std::optional<std::vector<Vertex>> is_partitionable(const Graph& G, Vertex v, std::size_t k, std::size_t threshold) {
  if (v >= G.size()) throw ArgumentError("is_partitionable: vertex out of range");
  const std::vector<Vertex> nbrs = G.neighbors(v);
  const std::size_t d = nbrs.size();
  const std::size_t need = d > threshold ? d - threshold : 0;

  // Distinct neighborhoods among Γ(v); C(u) depends on u only through Γ(u).
  std::vector<Row> rows;
  rows.reserve(d);
  for (auto u : nbrs) rows.push_back(neighborhood_row(G, u));
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < d; ++i) {
    bool seen = false;
    for (auto r : reps) {
      if (rows[r] == rows[i]) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(i);
  }

  // cover[r][i]: neighbor i lies in C(reps[r]).
  std::vector<std::vector<char>> cover(reps.size(), std::vector<char>(d, 0));
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (std::size_t i = 0; i < d; ++i) {
      std::size_t diff = 0;
      for (std::size_t w = 0; w < rows[i].size(); ++w) {
        diff += static_cast<std::size_t>(std::popcount(rows[i][w] ^ rows[reps[r]][w]));
      }
      cover[r][i] = diff < threshold;
    }
  }

  const std::size_t m = std::min(k, reps.size());
  std::vector<std::size_t> pick(m);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  while (true) {
    std::size_t covered = 0;
    for (std::size_t i = 0; i < d; ++i) {
      for (auto r : pick) {
        if (cover[r][i]) {
          ++covered;
          break;
        }
      }
    }
    if (covered >= need) {
      std::vector<Vertex> out;
      for (auto r : pick) out.push_back(nbrs[reps[r]]);
      return out;
    }
    // Next m-combination of [0, reps.size()).
    std::size_t i = m;
    while (i > 0 && pick[i - 1] == reps.size() - m + (i - 1)) --i;
    if (i == 0) return std::nullopt;
    ++pick[i - 1];
    for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace bucl
