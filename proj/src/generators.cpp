#include "bucl/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "bucl/errors.hpp"
#include "bucl/oracle.hpp"
#include "bucl/rounding.hpp"

namespace bucl {

namespace {

void check_eps(double eps) {
  if (!(eps > 0 && eps < 1)) throw ArgumentError("eps must lie in (0, 1)");
}

std::vector<Vertex> random_permutation(Rng& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Edges of H between the parts of every group, on permuted vertex ids.
Graph realize(const Graph& H, const Partitioning& cert, const std::vector<Vertex>& perm) {
  const std::size_t n = cert.labels.size();
  // members[group][part] -> vertices (unpermuted)
  std::vector<std::vector<std::vector<Vertex>>> members;
  for (Vertex v = 0; v < n; ++v) {
    const auto& l = cert.labels[v];
    if (members.size() <= l.group) members.resize(l.group + 1, std::vector<std::vector<Vertex>>(H.size()));
    members[l.group][l.part].push_back(v);
  }
  GraphBuilder b(n);
  for (const auto& parts : members) {
    for (Vertex j = 1; j < H.size(); ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if (!H.adjacent(i, j)) continue;
        for (const Vertex x : parts[i]) {
          for (const Vertex y : parts[j]) b.add_edge(perm[x], perm[y]);
        }
      }
    }
  }
  return std::move(b).build();
}

Partitioning permute(const Partitioning& cert, const std::vector<Vertex>& perm) {
  Partitioning out;
  out.labels.resize(cert.labels.size());
  for (std::size_t v = 0; v < cert.labels.size(); ++v) out.labels[perm[v]] = cert.labels[v];
  return out;
}

}  // namespace

GeneratedMember gen_member(const Graph& H, std::size_t n, double eps, double c, std::uint64_t seed) {
  check_eps(eps);
  const std::size_t h = H.size();
  if (h == 0 || n == 0) throw ArgumentError("gen_member: H and the instance must be non-empty");
  if (h > n) throw ArgumentError("gen_member: H has more vertices than the instance");
  const std::size_t max_part = floor_count(c * eps * static_cast<double>(n) / static_cast<double>(H.max_degree() + 1));
  if (max_part == 0) {
    throw ArgumentError("gen_member: c*eps*N/(Δ+1) < 1 leaves no room for a part");
  }

  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> part_size(1, max_part);
  Partitioning cert;
  cert.labels.reserve(n);
  std::size_t remaining = n;
  for (std::uint32_t group = 0; remaining > 0; ++group) {
    if (remaining < h) {
      cert.labels.insert(cert.labels.end(), remaining, PartLabel{group, 0});
      break;
    }
    for (std::uint32_t part = 0; part < h && remaining > 0; ++part) {
      const std::size_t take = std::min(part_size(rng), remaining);
      cert.labels.insert(cert.labels.end(), take, PartLabel{group, part});
      remaining -= take;
    }
  }
  const auto perm = random_permutation(rng, n);
  return {realize(H, cert, perm), permute(cert, perm)};
}

Graph gen_far_cycle_mismatch(std::size_t t, std::size_t n, double eps, std::uint64_t seed) {
  check_eps(eps);
  if (t < 4) throw ArgumentError("gen_far_cycle_mismatch: t must be at least 4");
  const std::size_t p = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(eps * static_cast<double>(n))));
  const std::size_t group_size = (t + 1) * p;
  const std::size_t groups = n / group_size;
  if (groups == 0) {
    throw ArgumentError("gen_far_cycle_mismatch: N=" + std::to_string(n) + " cannot hold one C" +
                        std::to_string(t + 1) + " group with parts of size " + std::to_string(p));
  }
  GraphBuilder cycle(t + 1);
  for (Vertex i = 0; i <= t; ++i) cycle.add_edge(i, static_cast<Vertex>((i + 1) % (t + 1)));
  const Graph C = std::move(cycle).build();

  Partitioning cert;
  cert.labels.reserve(n);
  for (std::uint32_t g = 0; g < groups; ++g) {
    for (std::uint32_t part = 0; part <= t; ++part) cert.labels.insert(cert.labels.end(), p, PartLabel{g, part});
  }
  // Leftover vertices: one singleton group each, so they stay isolated.
  for (std::uint32_t g = static_cast<std::uint32_t>(groups); cert.labels.size() < n; ++g) {
    cert.labels.push_back(PartLabel{g, 0});
  }
  Rng rng(seed);
  return realize(C, cert, random_permutation(rng, n));
}

Graph gen_planted_edges(const Graph& base, const Partitioning& certificate, std::size_t k, std::uint64_t seed) {
  const std::size_t n = base.size();
  if (certificate.labels.size() != n) throw ArgumentError("gen_planted_edges: certificate size mismatch");
  std::vector<Edge> candidates;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (certificate.labels[u].group != certificate.labels[v].group && !base.adjacent(u, v)) {
        candidates.push_back({u, v});
      }
    }
  }
  if (k > candidates.size()) {
    throw ArgumentError("gen_planted_edges: asked for " + std::to_string(k) + " edges, only " +
                        std::to_string(candidates.size()) + " cross-group pairs are free");
  }
  Rng rng(seed);
  std::vector<Edge> chosen;
  std::sample(candidates.begin(), candidates.end(), std::back_inserter(chosen), k, rng);
  GraphBuilder b(n);
  for (const auto& e : base.edges()) b.add_edge(e.u, e.v);
  for (const auto& e : chosen) b.add_edge(e.u, e.v);
  return std::move(b).build();
}

Graph gen_high_degree(std::size_t n, double eps, double c, std::uint64_t seed) {
  check_eps(eps);
  const std::size_t s = ceil_count(4.0 * c * eps * static_cast<double>(n)) + 1;
  if (s > n) {
    throw ArgumentError("gen_high_degree: clique size " + std::to_string(s) + " exceeds N=" + std::to_string(n));
  }
  const std::size_t cliques = n / s;
  std::vector<std::size_t> clique_of(n);
  for (std::size_t v = 0; v < n; ++v) clique_of[v] = v < cliques * s ? v / s : (v - cliques * s) % cliques;
  Rng rng(seed);
  const auto perm = random_permutation(rng, n);
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (clique_of[u] == clique_of[v]) b.add_edge(perm[u], perm[v]);
    }
  }
  return std::move(b).build();
}

double ld_excess_lower_bound(const Graph& G, std::size_t D) {
  double total = 0;
  for (Vertex v = 0; v < G.size(); ++v) {
    if (G.degree(v) > D) total += static_cast<double>(G.degree(v) - D);
  }
  return total / 2.0;
}

}  // namespace bucl
