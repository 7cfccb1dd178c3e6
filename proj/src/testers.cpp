#include <algorithm>
#include <iterator>
#include <unordered_map>

#include "bucl/errors.hpp"
#include "bucl/testers.hpp"

namespace bucl {

namespace {

using Signature = std::vector<std::uint8_t>;

// Indices (into `signatures`) of the first occurrence of each distinct value,
// stopping once `want` have been found.
std::vector<std::size_t> distinct_representatives(const std::vector<Signature>& signatures, std::size_t want) {
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < signatures.size() && reps.size() < want; ++i) {
    bool seen = false;
    for (auto r : reps) {
      if (signatures[r] == signatures[i]) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(i);
  }
  return reps;
}

PartitionabilityWitness make_fan_witness(Vertex center, const std::vector<Vertex>& members,
                                         const std::vector<Signature>& signatures,
                                         const std::vector<std::size_t>& reps, const std::vector<Vertex>& T) {
  PartitionabilityWitness w;
  w.center = center;
  for (auto r : reps) w.fan.push_back(members[r]);
  for (std::uint32_t i = 0; i < reps.size(); ++i) {
    for (std::uint32_t j = i + 1; j < reps.size(); ++j) {
      const Signature& a = signatures[reps[i]];
      const Signature& b = signatures[reps[j]];
      const auto k = static_cast<std::size_t>(std::mismatch(a.begin(), a.end(), b.begin()).first - a.begin());
      w.distinguishers.push_back({i, j, T[k]});
    }
  }
  return w;
}

// Smallest failing component of G|_S, then greedy vertex deletion while the
// induced subgraph stays outside BUC(H). The result is a minimal witness.
std::vector<Vertex> minimize_witness(const Graph& induced, const std::vector<Vertex>& labels, const Graph& H) {
  std::vector<Vertex> keep;
  for (const auto& comp : connected_components(induced)) {
    if (!is_blowup(induced_subgraph(induced, comp), H)) {
      keep = comp;
      break;
    }
  }
  for (std::size_t i = 0; i < keep.size();) {
    std::vector<Vertex> trial = keep;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!is_blowup_collection(induced_subgraph(induced, trial), H)) {
      keep = std::move(trial);
    } else {
      ++i;
    }
  }
  std::vector<Vertex> out;
  out.reserve(keep.size());
  for (auto x : keep) out.push_back(labels[x]);
  std::sort(out.begin(), out.end());
  return out;
}

void check_profile(const BaseGraphProfile& profile) {
  if (profile.delta == 0) throw ArgumentError("base graph must have at least one edge");
}

}  // namespace

Verdict low_degree_test(NonAdaptivePlan& plan, double eps, double c, double beta, const TesterParams& params) {
  const std::size_t n = plan.vertex_count();
  const auto levels = low_degree_levels(n, eps, c, beta, params);
  Rng& rng = plan.rng();

  struct Probe {
    std::size_t level;
    Vertex vertex;
    std::vector<Vertex> draws;  // empty: every other vertex (exact mode)
  };
  std::vector<Probe> probes;
  std::vector<char> exact_added(n, 0);
  std::vector<Vertex> everyone(n);
  for (Vertex v = 0; v < n; ++v) everyone[v] = v;

  for (const auto& L : levels) {
    for (const Vertex x : sample_vertices(rng, n, L.samples)) {
      Probe p{L.level, x, {}};
      if (L.probes + 1 >= n) {
        if (!exact_added[x]) {
          const Vertex one[] = {x};
          plan.add_product(one, everyone);
          exact_added[x] = 1;
        }
      } else {
        p.draws.reserve(L.probes);
        for (std::size_t i = 0; i < L.probes; ++i) {
          const Vertex y = uniform_vertex(rng, n);
          p.draws.push_back(y);
          if (y != x) plan.add_pair(x, y);
        }
      }
      probes.push_back(std::move(p));
    }
  }
  plan.seal();

  Verdict verdict;
  std::unordered_map<Vertex, std::size_t> exact_degree;
  for (const auto& p : probes) {
    const auto& L = levels[p.level];
    std::size_t hits = 0;
    std::size_t m = 0;
    double estimate = 0;
    if (p.draws.empty()) {
      auto it = exact_degree.find(p.vertex);
      if (it == exact_degree.end()) {
        std::size_t d = 0;
        for (Vertex y = 0; y < n; ++y) {
          if (y != p.vertex && plan.answer(p.vertex, y)) ++d;
        }
        it = exact_degree.emplace(p.vertex, d).first;
      }
      hits = it->second;
      m = n;
      estimate = static_cast<double>(hits);
    } else {
      for (const Vertex y : p.draws) {
        if (y != p.vertex && plan.answer(p.vertex, y)) ++hits;
      }
      m = p.draws.size();
      estimate = static_cast<double>(hits) / static_cast<double>(m) * static_cast<double>(n);
    }
    if (estimate > L.threshold) {
      verdict.decision = Decision::reject;
      verdict.degree = DegreeEstimateRecord{L.level, p.vertex, m, hits, estimate, L.threshold};
      break;
    }
  }
  verdict.ledger = plan.ledger();
  return verdict;
}

Verdict adaptive_buc_test(AdaptiveSession& session, double eps, const BaseGraphProfile& profile, double c,
                          const TesterParams& params) {
  check_profile(profile);
  const std::size_t n = session.vertex_count();
  const AdaptivePlanSizes sz = adaptive_sizes(n, eps, profile, c, params);
  const std::size_t delta = profile.delta;
  Rng& rng = session.rng();
  Verdict verdict;

  // Stage 1: a vertex whose neighbors show Δ+1 distinct neighborhoods.
  for (std::size_t iter = 0; iter < sz.stage1_iterations; ++iter) {
    const Vertex v = uniform_vertex(rng, n);
    std::vector<Vertex> nbrs;
    for (const Vertex s : sample_vertices(rng, n, sz.s_size)) {
      if (s != v && session.probe(v, s)) nbrs.push_back(s);
    }
    std::vector<Vertex> sbar;
    std::sample(nbrs.begin(), nbrs.end(), std::back_inserter(sbar), sz.sbar_cap, rng);
    const std::vector<Vertex> T = sample_vertices(rng, n, sz.t_size);
    std::vector<Signature> sigs;
    sigs.reserve(sbar.size());
    for (const Vertex u : sbar) {
      Signature sig(T.size(), 0);
      for (std::size_t k = 0; k < T.size(); ++k) {
        if (T[k] != u) sig[k] = session.probe(u, T[k]) ? 1 : 0;
      }
      sigs.push_back(std::move(sig));
    }
    const auto reps = distinct_representatives(sigs, delta + 1);
    if (reps.size() == delta + 1) {
      verdict.decision = Decision::reject;
      verdict.witness = make_fan_witness(v, sbar, sigs, reps, T);
      verdict.ledger = session.ledger();
      return verdict;
    }
  }

  // Stage 2: random connected sets of size up to W, checked for membership.
  for (std::size_t iter = 0; iter < sz.stage2_iterations; ++iter) {
    std::vector<Vertex> U{uniform_vertex(rng, n)};
    for (std::size_t j = 2; j <= sz.w; ++j) {
      const std::vector<Vertex> Tj = sample_vertices(rng, n, sz.tj_size);
      std::vector<Vertex> gamma;
      for (const Vertex t : Tj) {
        bool hit = false;
        for (const Vertex u : U) {
          if (u != t && session.probe(u, t)) hit = true;
        }
        if (hit) gamma.push_back(t);
      }
      if (gamma.empty()) break;
      // Uniform draw from Γ_{T_j}(U); a vertex already in U is redrawn, at
      // most |Γ| attempts in total.
      for (std::size_t attempt = 0; attempt < gamma.size(); ++attempt) {
        const Vertex pick = gamma[uniform_vertex(rng, gamma.size())];
        if (std::find(U.begin(), U.end(), pick) == U.end()) {
          U.push_back(pick);
          break;
        }
      }
    }
    if (U.size() < 2) continue;
    GraphBuilder b(U.size());
    for (Vertex a = 0; a < U.size(); ++a) {
      for (Vertex x = a + 1; x < U.size(); ++x) {
        if (!session.ledger().contains(U[a], U[x])) throw std::logic_error("stage-2 pair was not probed");
        if (session.probe(U[a], U[x])) b.add_edge(a, x);
      }
    }
    if (!is_blowup_collection(std::move(b).build(), profile.H)) {
      std::sort(U.begin(), U.end());
      verdict.decision = Decision::reject;
      verdict.witness = InducedSubgraphWitness{std::move(U)};
      verdict.ledger = session.ledger();
      return verdict;
    }
  }

  verdict.ledger = session.ledger();
  return verdict;
}

Verdict nonadaptive_buc_test(NonAdaptivePlan& plan, double eps, const BaseGraphProfile& profile, double c,
                             const TesterParams& params) {
  check_profile(profile);
  const std::size_t n = plan.vertex_count();
  const NonAdaptivePlanSizes sz = nonadaptive_sizes(n, eps, profile, c, params);
  const std::size_t delta = profile.delta;
  Rng& rng = plan.rng();

  const std::vector<Vertex> S1 = sample_vertices(rng, n, sz.s1_size);
  const std::vector<Vertex> T = sample_vertices(rng, n, sz.t_size);
  const std::vector<Vertex> S2 = sample_vertices(rng, n, sz.s2_size);
  plan.add_square(S1);
  plan.add_product(S1, T);
  plan.add_square(S2);
  plan.seal();

  Verdict verdict;

  // Rule (i): Δ+1 distinct T-signatures among the S1-neighbors of one vertex.
  std::vector<Signature> signature_of(S1.size());
  for (std::size_t i = 0; i < S1.size(); ++i) {
    Signature sig(T.size(), 0);
    for (std::size_t k = 0; k < T.size(); ++k) {
      if (T[k] != S1[i]) sig[k] = plan.answer(S1[i], T[k]) ? 1 : 0;
    }
    signature_of[i] = std::move(sig);
  }
  for (std::size_t i = 0; i < S1.size(); ++i) {
    std::vector<Vertex> members;
    std::vector<Signature> sigs;
    for (std::size_t j = 0; j < S1.size(); ++j) {
      if (j != i && plan.answer(S1[i], S1[j])) {
        members.push_back(S1[j]);
        sigs.push_back(signature_of[j]);
      }
    }
    const auto reps = distinct_representatives(sigs, delta + 1);
    if (reps.size() == delta + 1) {
      verdict.decision = Decision::reject;
      verdict.witness = make_fan_witness(S1[i], members, sigs, reps, T);
      verdict.ledger = plan.ledger();
      return verdict;
    }
  }

  // Rule (ii): the induced subgraph on S2.
  GraphBuilder b(S2.size());
  for (Vertex a = 0; a < S2.size(); ++a) {
    for (Vertex x = a + 1; x < S2.size(); ++x) {
      if (plan.answer(S2[a], S2[x])) b.add_edge(a, x);
    }
  }
  const Graph induced = std::move(b).build();
  if (!is_blowup_collection(induced, profile.H)) {
    verdict.decision = Decision::reject;
    verdict.witness = InducedSubgraphWitness{minimize_witness(induced, S2, profile.H)};
  }
  verdict.ledger = plan.ledger();
  return verdict;
}

Verdict combined_test(Variant variant, const Graph& G, double eps, const BaseGraphProfile& profile, double c,
                      const TesterParams& params, std::uint64_t seed) {
  check_profile(profile);
  NonAdaptivePlan degree_plan(G, mix_seed(seed, 0));
  Verdict verdict = low_degree_test(degree_plan, eps, c, combined_beta(profile, c), params);
  if (verdict.rejected()) return verdict;

  Verdict structure;
  if (variant == Variant::adaptive) {
    AdaptiveSession session(G, mix_seed(seed, 1));
    structure = adaptive_buc_test(session, eps / 3.0, profile, c, params);
  } else {
    NonAdaptivePlan plan(G, mix_seed(seed, 1));
    structure = nonadaptive_buc_test(plan, eps / 3.0, profile, c, params);
  }
  structure.ledger.merge(verdict.ledger);
  return structure;
}

}  // namespace bucl
