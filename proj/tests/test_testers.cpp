#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "bucl/errors.hpp"
#include "bucl/exact.hpp"
#include "bucl/generators.hpp"
#include "bucl/testers.hpp"
#include "support.hpp"

namespace bucl {
namespace {

using testing::complete;
using testing::cycle;

BaseGraphProfile c4_profile() { return profile_with_w(cycle(4)); }

// Disjoint cliques of the given size covering n vertices (the last may be smaller).
Graph clique_blocks(std::size_t n, std::size_t size) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = v - v % size; u < v; ++u) b.add_edge(u, v);
  }
  return std::move(b).build();
}

TEST(TesterParams, ValidateSetAndFingerprint) {
  TesterParams p;
  EXPECT_NO_THROW(p.validate());
  const auto fp = p.fingerprint();
  EXPECT_EQ(fp.size(), 16u);
  p.set("a_N3", "3.5");
  EXPECT_DOUBLE_EQ(p.a_N3, 3.5);
  EXPECT_NE(p.fingerprint(), fp);
  p.set("W", "5");
  EXPECT_EQ(p.w_override, 5u);
  EXPECT_THROW(p.set("a_bogus", "1"), ConfigError);
  EXPECT_THROW(p.set("a_S", "two"), ConfigError);
  p.set("a_S", "0.5");
  EXPECT_THROW(p.validate(), ConfigError);
  TesterParams q;
  q.iter2_cap = 0;
  EXPECT_THROW(q.validate(), ConfigError);
}

TEST(PlanSizes, AdaptiveFormulas) {
  const auto s = adaptive_sizes(2000, 0.01, c4_profile(), 2, TesterParams{});
  EXPECT_DOUBLE_EQ(s.alpha, 1.0 / 512);
  EXPECT_EQ(s.stage1_iterations, 24u);
  EXPECT_EQ(s.s_size, 2000u);  // 204800 capped at N
  EXPECT_EQ(s.sbar_cap, 2048u);
  EXPECT_EQ(s.t_size, 2000u);
  EXPECT_EQ(s.stage2_iterations, 2000u);  // (4*4*2)^4 capped
  EXPECT_EQ(s.tj_size, 400u);
  EXPECT_EQ(s.w, 4u);

  const auto big = adaptive_sizes(100000000, 0.01, c4_profile(), 2, TesterParams{});
  EXPECT_EQ(big.s_size, 204800u);
  EXPECT_EQ(big.t_size, 409600u);
}

TEST(PlanSizes, NonAdaptiveSecondSetScalesAsThreeQuarterPower) {
  TesterParams p;
  const std::size_t n = 1000000000;
  for (double eps : {0.02, 0.01, 0.005, 0.0025}) {
    const auto a = nonadaptive_sizes(n, eps, c4_profile(), 2, p);
    const auto b = nonadaptive_sizes(n, eps / 2, c4_profile(), 2, p);
    EXPECT_NEAR(static_cast<double>(b.s2_size), std::pow(2.0, 0.75) * static_cast<double>(a.s2_size), 2.0);
    EXPECT_NEAR(static_cast<double>(b.s1_size), std::pow(2.0, 0.75) * static_cast<double>(a.s1_size), 2.0);
  }
  const auto s = nonadaptive_sizes(n, 0.01, c4_profile(), 2, p);
  EXPECT_EQ(s.s2_size, static_cast<std::size_t>(std::ceil(p.a_N3 * std::pow(0.08, -0.75))));
}

TEST(PlanSizes, MissingWIsAConfigurationError) {
  const auto p = make_profile(cycle(5));
  EXPECT_THROW(adaptive_sizes(100, 0.1, p, 2, TesterParams{}), ConfigError);
  EXPECT_THROW(nonadaptive_sizes(100, 0.1, p, 2, TesterParams{}), ConfigError);
  TesterParams with;
  with.w_override = 6;
  EXPECT_EQ(adaptive_sizes(100, 0.1, p, 2, with).w, 6u);
}

TEST(PlanSizes, ArgumentChecks) {
  EXPECT_THROW(adaptive_sizes(100, 0, c4_profile(), 2, TesterParams{}), ArgumentError);
  EXPECT_THROW(adaptive_sizes(100, 0.1, c4_profile(), 1, TesterParams{}), ArgumentError);
  EXPECT_THROW(low_degree_levels(100, 0.1, 2, 0, TesterParams{}), ArgumentError);
  EXPECT_THROW(low_degree_levels(100, 0.1, 2, 1.5, TesterParams{}), ArgumentError);
  auto edgeless = make_profile(Graph::empty(3));
  edgeless.w = BaseGraphProfile::WValue{2, true};
  const Graph G = Graph::empty(10);
  AdaptiveSession s(G, 1);
  EXPECT_THROW(adaptive_buc_test(s, 0.1, edgeless, 2, TesterParams{}), ArgumentError);
}

TEST(LowDegreeLevels, Formulas) {
  const auto L = low_degree_levels(2000, 0.01, 2, 0.25, TesterParams{});
  ASSERT_EQ(L.size(), 7u);  // j = 0..ceil(log2(50))
  EXPECT_EQ(L[0].samples, static_cast<std::size_t>(std::ceil(3 * 4 * std::log(16.0))));
  EXPECT_DOUBLE_EQ(L[0].threshold, (1 + 0.25 / 4) * 40);
  EXPECT_DOUBLE_EQ(L[6].threshold, 0.75 * 64 * 40);
  for (const auto& l : L) EXPECT_GE(l.probes, 1u);
}

TEST(LowDegree, EmptyGraphAlwaysAccepted) {
  const Graph G = Graph::empty(2000);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    NonAdaptivePlan plan(G, seed);
    const Verdict v = low_degree_test(plan, 0.01, 2, 0.25, TesterParams{});
    EXPECT_FALSE(v.rejected());
    EXPECT_EQ(plan.pre_seal_reads(), 0u);
  }
}

TEST(LowDegree, DenseCliquesRejected) {
  const Graph G = clique_blocks(2000, 161);  // every degree >= 4 c eps N
  std::size_t rejects = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    NonAdaptivePlan plan(G, seed);
    const Verdict v = low_degree_test(plan, 0.01, 2, 0.25, TesterParams{});
    if (v.rejected()) {
      ++rejects;
      ASSERT_TRUE(v.degree);
      EXPECT_GT(v.degree->estimate, v.degree->threshold);
      EXPECT_EQ(v.evidence_kind(), "degree-estimate");
    }
  }
  EXPECT_GE(rejects, 190u);
}

TEST(LowDegree, MaximumAllowedDegreeAccepted) {
  const Graph G = clique_blocks(2000, 41);  // degree exactly floor(c eps N) = 40 (last block smaller)
  EXPECT_EQ(G.max_degree(), 40u);
  std::size_t accepts = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    NonAdaptivePlan plan(G, seed);
    accepts += !low_degree_test(plan, 0.01, 2, 0.25, TesterParams{}).rejected();
  }
  EXPECT_GE(accepts, 160u);
}

TEST(AdaptiveBuc, MembersAlwaysAcceptedWithinBound) {
  const auto profile = c4_profile();
  TesterParams p;
  p.iter2_cap = 300;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph G = gen_member(cycle(4), 600, 0.02, 2, seed).graph;
    AdaptiveSession s(G, seed);
    const Verdict v = adaptive_buc_test(s, 0.02, profile, 2, p);
    EXPECT_FALSE(v.rejected());
    EXPECT_EQ(v.evidence_kind(), "none");
    EXPECT_LE(v.ledger.distinct_count(), adaptive_query_bound(600, adaptive_sizes(600, 0.02, profile, 2, p)));
  }
}

TEST(AdaptiveBuc, FarInstancesRejectedWithValidCertificates) {
  const auto profile = c4_profile();
  std::size_t rejects = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph G = gen_far_cycle_mismatch(4, 1000, 0.02, seed);
    AdaptiveSession s(G, seed);
    const Verdict v = adaptive_buc_test(s, 0.02, profile, 2, TesterParams{});
    if (v.rejected()) {
      ++rejects;
      ASSERT_TRUE(v.witness);
      EXPECT_TRUE(verify_evidence(G, *v.witness, profile.H, profile.delta));
    }
  }
  EXPECT_GE(rejects, 20u);
}

TEST(AdaptiveBuc, StageOneFiresOnAWrongDegreePattern) {
  // K4 blow-up tested against C4: every vertex sees three distinct parts.
  const std::size_t sizes[] = {50, 50, 50, 50};
  const Graph G = blow_up(complete(4), sizes).graph;
  const auto profile = c4_profile();
  AdaptiveSession s(G, 3);
  const Verdict v = adaptive_buc_test(s, 0.05, profile, 2, TesterParams{});
  ASSERT_TRUE(v.rejected());
  EXPECT_EQ(v.evidence_kind(), "partitionability");
  EXPECT_TRUE(verify_evidence(G, *v.witness, profile.H, profile.delta));
}

TEST(AdaptiveBuc, DeterministicInSeed) {
  const Graph G = gen_member(cycle(4), 400, 0.05, 2, 1).graph;
  TesterParams p;
  p.iter2_cap = 100;
  AdaptiveSession a(G, 42), b(G, 42), c(G, 43);
  const auto va = adaptive_buc_test(a, 0.05, c4_profile(), 2, p);
  const auto vb = adaptive_buc_test(b, 0.05, c4_profile(), 2, p);
  const auto vc = adaptive_buc_test(c, 0.05, c4_profile(), 2, p);
  EXPECT_EQ(va.ledger, vb.ledger);
  EXPECT_NE(va.ledger.digest(), vc.ledger.digest());
}

TEST(NonAdaptiveBuc, LedgerIsTheUnionOfTheCommittedSets) {
  const Graph G = gen_member(cycle(4), 1000, 0.5, 2, 5).graph;
  const auto profile = c4_profile();
  const TesterParams p;
  const auto sz = nonadaptive_sizes(1000, 0.5, profile, 2, p);
  ASSERT_LT(sz.s1_size, 1000u);
  NonAdaptivePlan plan(G, 77);
  const Verdict v = nonadaptive_buc_test(plan, 0.5, profile, 2, p);
  EXPECT_FALSE(v.rejected());
  EXPECT_TRUE(plan.sealed());
  EXPECT_EQ(plan.pre_seal_reads(), 0u);

  Rng rng(77);
  const auto S1 = sample_vertices(rng, 1000, sz.s1_size);
  const auto T = sample_vertices(rng, 1000, sz.t_size);
  const auto S2 = sample_vertices(rng, 1000, sz.s2_size);
  std::set<std::pair<Vertex, Vertex>> pairs;
  auto add = [&](Vertex a, Vertex b) {
    if (a != b) pairs.emplace(std::min(a, b), std::max(a, b));
  };
  for (auto a : S1) {
    for (auto b : S1) add(a, b);
    for (auto t : T) add(a, t);
  }
  for (auto a : S2) {
    for (auto b : S2) add(a, b);
  }
  EXPECT_EQ(v.ledger.distinct_count(), pairs.size());
  EXPECT_LE(v.ledger.distinct_count(), nonadaptive_query_bound(1000, sz));
}

TEST(NonAdaptiveBuc, MembersAcceptedFarRejectedWithMinimalWitnesses) {
  const auto profile = c4_profile();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph M = gen_member(cycle(4), 800, 0.02, 2, seed).graph;
    NonAdaptivePlan pm(M, seed);
    EXPECT_FALSE(nonadaptive_buc_test(pm, 0.02, profile, 2, TesterParams{}).rejected());
  }
  std::size_t rejects = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph F = gen_far_cycle_mismatch(4, 800, 0.02, seed);
    NonAdaptivePlan pf(F, seed);
    const Verdict v = nonadaptive_buc_test(pf, 0.02, profile, 2, TesterParams{});
    if (!v.rejected()) continue;
    ++rejects;
    ASSERT_TRUE(v.witness);
    EXPECT_TRUE(verify_evidence(F, *v.witness, profile.H, profile.delta));
    if (const auto* u = std::get_if<InducedSubgraphWitness>(&*v.witness)) EXPECT_LE(u->vertices.size(), 4u);
  }
  EXPECT_GE(rejects, 14u);
}

TEST(NonAdaptiveBuc, DeterministicInSeed) {
  const Graph G = gen_far_cycle_mismatch(4, 500, 0.04, 2);
  NonAdaptivePlan a(G, 8), b(G, 8);
  const auto va = nonadaptive_buc_test(a, 0.04, c4_profile(), 2, TesterParams{});
  const auto vb = nonadaptive_buc_test(b, 0.04, c4_profile(), 2, TesterParams{});
  EXPECT_EQ(va.ledger, vb.ledger);
  EXPECT_EQ(va.decision, vb.decision);
}

TEST(Combined, BetaAndStages) {
  const auto profile = c4_profile();
  EXPECT_DOUBLE_EQ(combined_beta(profile, 2), 1.0 / 144);
  TesterParams p;
  p.iter2_cap = 100;

  const Graph member = gen_member(cycle(4), 600, 0.05, 2, 1).graph;
  const Graph dense = gen_high_degree(600, 0.05, 2, 1);
  const Graph far = gen_far_cycle_mismatch(4, 600, 0.05, 1);
  for (auto variant : {Variant::adaptive, Variant::nonadaptive}) {
    EXPECT_FALSE(combined_test(variant, member, 0.05, profile, 2, p, 1).rejected());
    const auto d = combined_test(variant, dense, 0.05, profile, 2, p, 1);
    EXPECT_TRUE(d.rejected());
    EXPECT_EQ(d.evidence_kind(), "degree-estimate");
    const auto f = combined_test(variant, far, 0.05, profile, 2, p, 1);
    EXPECT_TRUE(f.rejected());
    ASSERT_TRUE(f.witness);
    EXPECT_TRUE(verify_evidence(far, *f.witness, profile.H, profile.delta));
  }
}

TEST(Combined, LedgerIsUnionOfStages) {
  const auto profile = c4_profile();
  TesterParams p;
  p.iter2_cap = 50;
  const Graph G = gen_member(cycle(4), 500, 0.05, 2, 3).graph;
  const auto v = combined_test(Variant::nonadaptive, G, 0.05, profile, 2, p, 9);
  NonAdaptivePlan deg(G, mix_seed(9, 0));
  auto d = low_degree_test(deg, 0.05, 2, combined_beta(profile, 2), p);
  NonAdaptivePlan buc(G, mix_seed(9, 1));
  auto b = nonadaptive_buc_test(buc, 0.05 / 3, profile, 2, p);
  d.ledger.merge(b.ledger);
  EXPECT_EQ(v.ledger, d.ledger);
}

}  // namespace
}  // namespace bucl
