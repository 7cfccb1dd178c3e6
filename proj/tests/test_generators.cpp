#include <gtest/gtest.h>

#include <cmath>

#include "bucl/errors.hpp"
#include "bucl/exact.hpp"
#include "bucl/generators.hpp"
#include "support.hpp"

namespace bucl {
namespace {

using testing::complete;
using testing::cycle;

TEST(GenMember, FourCycleAtDeskScale) {
  const auto m = gen_member(cycle(4), 2000, 0.01, 2, 1);
  EXPECT_EQ(m.graph.size(), 2000u);
  EXPECT_LE(m.graph.max_degree(), 40u);
  EXPECT_TRUE(validates_blowup_collection(m.graph, cycle(4), m.certificate));
  EXPECT_TRUE(is_blowup_collection(m.graph, cycle(4)));
}

TEST(GenMember, SmallTriangleInstance) {
  const auto m = gen_member(complete(3), 12, 0.5, 2, 4);
  EXPECT_EQ(m.graph.size(), 12u);
  EXPECT_TRUE(validates_blowup_collection(m.graph, complete(3), m.certificate));
  EXPECT_LE(m.graph.max_degree(), 12u);
}

TEST(GenMember, DeterministicInSeed) {
  EXPECT_EQ(gen_member(cycle(4), 300, 0.05, 2, 9).graph, gen_member(cycle(4), 300, 0.05, 2, 9).graph);
  EXPECT_NE(gen_member(cycle(4), 300, 0.05, 2, 9).graph, gen_member(cycle(4), 300, 0.05, 2, 10).graph);
}

TEST(GenMember, MembershipAndDegreeOverManySeeds) {
  for (const Graph& H : {cycle(4), cycle(5), complete(3), complete(4)}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto m = gen_member(H, 500, 0.02, 2, seed);
      EXPECT_TRUE(validates_blowup_collection(m.graph, H, m.certificate));
      EXPECT_TRUE(is_blowup_collection(m.graph, H));
      EXPECT_LE(static_cast<double>(m.graph.max_degree()), 2 * 0.02 * 500);
    }
  }
}

TEST(GenMember, InfeasibleSizesThrow) {
  EXPECT_THROW(gen_member(cycle(4), 3, 0.5, 2, 0), ArgumentError);     // h > N
  EXPECT_THROW(gen_member(cycle(4), 100, 0.01, 2, 0), ArgumentError);  // c eps N / 3 < 1
}

TEST(GenFarCycleMismatch, SmallInstanceIsFar) {
  const Graph G = gen_far_cycle_mismatch(4, 9, 0.1, 3);
  EXPECT_EQ(G.size(), 9u);
  EXPECT_EQ(G.edge_count(), 5u);  // one C5 with unit parts, four isolated vertices
  EXPECT_GE(distance_to_buc(G, cycle(4)), 1u);
}

TEST(GenFarCycleMismatch, StructureAtDeskScale) {
  const Graph G = gen_far_cycle_mismatch(4, 2000, 0.01, 5);
  EXPECT_LE(G.max_degree(), 40u);
  EXPECT_EQ(connected_components(G).size(), 20u);
  EXPECT_EQ(G.edge_count(), 20u * 5 * 400);
  EXPECT_FALSE(is_blowup_collection(G, cycle(4)));
  EXPECT_TRUE(is_blowup_collection(G, cycle(5)));
}

TEST(GenFarCycleMismatch, DeterministicAndValidated) {
  EXPECT_EQ(gen_far_cycle_mismatch(4, 500, 0.02, 1), gen_far_cycle_mismatch(4, 500, 0.02, 1));
  EXPECT_THROW(gen_far_cycle_mismatch(3, 500, 0.02, 1), ArgumentError);
  EXPECT_THROW(gen_far_cycle_mismatch(4, 39, 0.2, 1), ArgumentError);  // parts of 8 need 40 vertices
}

TEST(GenPlantedEdges, Examples) {
  const auto m = gen_member(cycle(4), 8, 0.5, 2, 2);
  EXPECT_EQ(gen_planted_edges(m.graph, m.certificate, 0, 1), m.graph);

  // Two C4 groups on 8 vertices plus one cross edge.
  const Graph two[] = {cycle(4), cycle(4)};
  const Graph base = disjoint_union(two);
  const auto cert = *is_blowup_collection(base, cycle(4));
  const Graph planted = gen_planted_edges(base, cert, 1, 5);
  EXPECT_EQ(planted.edge_count(), 9u);
  EXPECT_EQ(distance_to_buc(planted, cycle(4)), 1u);
  for (const auto& e : planted.edges()) {
    if (!base.adjacent(e.u, e.v)) EXPECT_NE(cert.labels[e.u].group, cert.labels[e.v].group);
  }
  EXPECT_THROW(gen_planted_edges(base, cert, 17, 5), ArgumentError);  // only 16 cross pairs
}

TEST(GenHighDegree, CliqueSizeAndDegrees) {
  const Graph G = gen_high_degree(2000, 0.01, 2, 1);
  const std::size_t s = 161;  // ceil(4 * 2 * 0.01 * 2000) + 1
  for (Vertex v = 0; v < G.size(); ++v) EXPECT_GE(G.degree(v), s - 1);
  EXPECT_EQ(connected_components(G).size(), 2000u / s);
  EXPECT_EQ(gen_high_degree(500, 0.02, 2, 4), gen_high_degree(500, 0.02, 2, 4));
  EXPECT_THROW(gen_high_degree(10, 0.4, 2, 0), ArgumentError);
}

TEST(GenHighDegree, ExcessBoundAgainstExactOracle) {
  const Graph G = gen_high_degree(40, 0.1, 1, 7);  // cliques of ceil(16)+1 = 17
  const std::size_t D = 4;                         // c eps N
  const double bound = ld_excess_lower_bound(G, D);
  EXPECT_GE(static_cast<double>(distance_to_ld(G, D)), bound);
  EXPECT_GE(bound, 40.0 * (3 * 1 * 0.1 * 40) / 2);
}

}  // namespace
}  // namespace bucl
