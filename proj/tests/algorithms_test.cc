// Copyright 2026 The Semistream Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semistream/algorithms.h"

#include <gtest/gtest.h>

#include <cmath>

#include "semistream/generators.h"
#include "semistream/oracle.h"

namespace semistream {
namespace {

// Builds a graph whose file order is exactly `stream`.
struct Stream {
  BipartiteGraph graph;
  ArrivalOrder order;

  Stream(std::size_t n_a, std::size_t n_b, std::vector<Edge> stream)
      : graph(n_a, n_b, stream), order(ArrivalOrder::identity(stream.size())) {}
};

std::vector<Edge> sorted(std::vector<Edge> v) {
  std::sort(v.begin(), v.end());
  return v;
}

SubsetSample sample_of(std::size_t n_a, std::initializer_list<Vertex> members) {
  SubsetSample s{0.5, VertexSet(n_a, false)};
  for (Vertex a : members) s.members.insert(a);
  return s;
}

// half_trap(2) streamed as (0,2),(1,3),(2,2),(3,3),(0,0),(1,1).
Stream wing_friendly_half_trap() {
  return Stream(4, 4, {{0, 2}, {1, 3}, {2, 2}, {3, 3}, {0, 0}, {1, 1}});
}

TEST(Greedy, EmptyStream) {
  Stream s(3, 3, {});
  StreamSource src(s.graph, s.order);
  EXPECT_TRUE(greedy(src).empty());
}

TEST(Greedy, FirstEdgeBlocksOthers) {
  Stream s(2, 2, {{0, 0}, {0, 1}, {1, 0}});
  StreamSource src(s.graph, s.order);
  EXPECT_EQ(greedy(src).edges(), (std::vector<Edge>{{0, 0}}));
}

TEST(Greedy, HalfTrapAdversarial) {
  auto [g, order] = gen_half_trap(2);
  StreamSource src(g, order);
  const Matching m = greedy(src);
  EXPECT_EQ(m.edges(), (std::vector<Edge>{{0, 2}, {1, 3}}));
  EXPECT_EQ(max_matching(g).size(), 4u);
}

TEST(Greedy, FilterRestrictsEdges) {
  Stream s(2, 2, {{0, 0}, {1, 1}});
  EdgeFilter f(VertexSet(2, false), VertexSet(2, true));
  f.allowed_a().insert(1);
  StreamSource src(s.graph, s.order);
  EXPECT_EQ(greedy(src, &f).edges(), (std::vector<Edge>{{1, 1}}));
}

TEST(Greedy, FilterShapeMismatch) {
  Stream s(2, 2, {{0, 0}});
  EdgeFilter f = EdgeFilter::accept_all(3, 2);
  StreamSource src(s.graph, s.order);
  EXPECT_THROW(greedy(src, &f), std::invalid_argument);
}

TEST(Semi, StarCapsAtLambda) {
  Stream s(4, 1, {{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  StreamSource src(s.graph, s.order);
  const SemiMatching sm = semi(src, 3);
  EXPECT_EQ(sm.edges(), (std::vector<Edge>{{0, 0}, {1, 0}, {2, 0}}));
  EXPECT_EQ(sm.degree_of_b(0), 3u);
}

TEST(Semi, LambdaOneIsGreedy) {
  Stream s(2, 1, {{0, 0}, {1, 0}});
  StreamSource src(s.graph, s.order);
  EXPECT_EQ(semi(src, 1).edges(), (std::vector<Edge>{{0, 0}}));
}

TEST(Semi, HalfTrapAdversarial) {
  auto [g, order] = gen_half_trap(2);
  StreamSource src(g, order);
  EXPECT_EQ(semi(src, 3).edges(),
            (std::vector<Edge>{{0, 2}, {1, 3}, {2, 2}, {3, 3}}));
}

TEST(Semi, RejectsLambdaZero) {
  Stream s(1, 1, {{0, 0}});
  StreamSource src(s.graph, s.order);
  EXPECT_THROW(semi(src, 0), std::invalid_argument);
  EXPECT_EQ(src.passes_opened(), 0);
}

TEST(SampleVertexSubset, Extremes) {
  EXPECT_EQ(sample_vertex_subset(50, 0.0, 1).members.count(), 0u);
  EXPECT_EQ(sample_vertex_subset(50, 1.0, 1).members.count(), 50u);
}

TEST(SampleVertexSubset, RejectsBadProbability) {
  EXPECT_THROW(sample_vertex_subset(5, -0.1, 1), std::invalid_argument);
  EXPECT_THROW(sample_vertex_subset(5, 1.1, 1), std::invalid_argument);
  EXPECT_THROW(sample_vertex_subset(5, std::nan(""), 1), std::invalid_argument);
}

TEST(SampleVertexSubset, HalfConcentratesAndIsPinned) {
  const SubsetSample s = sample_vertex_subset(100000, 0.5, 42);
  const double frac = static_cast<double>(s.members.count()) / 100000.0;
  EXPECT_GE(frac, 0.49);
  EXPECT_LE(frac, 0.51);
  // Regression value, cross-checked with an independent Python splitmix64.
  EXPECT_EQ(s.members.count(), 50064u);
}

TEST(SampleVertexSubset, DefaultProbabilityReference) {
  // Draw < floor(p * 2^64) = 7640891576956014592 for p = sqrt(2) - 1.
  const SubsetSample s = sample_vertex_subset(20, kDefaultSampleProbability, 42);
  EXPECT_EQ(s.members.members(),
            (std::vector<Vertex>{1, 2, 3, 4, 6, 8, 10, 15, 16, 18}));
}

TEST(RandomSubsetGreedy, FullSampleIsGreedy) {
  auto [g, order] = gen_half_trap(5);
  StreamSource a(g, order);
  StreamSource b(g, order);
  EXPECT_EQ(random_subset_greedy(a, sample_vertex_subset(g.n_a(), 1.0, 0)),
            greedy(b));
}

TEST(RandomSubsetGreedy, EmptySample) {
  auto [g, order] = gen_half_trap(5);
  StreamSource src(g, order);
  EXPECT_TRUE(random_subset_greedy(src, sample_of(g.n_a(), {})).empty());
  EXPECT_EQ(src.passes_opened(), 1);
}

TEST(RandomSubsetGreedy, HalfTrapSample) {
  auto [g, order] = gen_half_trap(2);
  StreamSource src(g, order);
  EXPECT_EQ(random_subset_greedy(src, sample_of(4, {2, 3})).edges(),
            (std::vector<Edge>{{2, 2}, {3, 3}}));
}

TEST(AugmentWithWings, NoLeftWingsLeavesM0) {
  const Matching m0 = matching_from_edges(4, 4, std::vector<Edge>{{0, 2}, {1, 3}});
  const std::vector<Edge> right = {{2, 2}};
  EXPECT_EQ(augment_with_wings(m0, right, Matching(4, 4)), m0);
}

TEST(AugmentWithWings, TwoThreeAugmentingPaths) {
  const Matching m0 = matching_from_edges(4, 4, std::vector<Edge>{{0, 2}, {1, 3}});
  const std::vector<Edge> right = {{2, 2}, {3, 3}};
  const Matching left = matching_from_edges(4, 4, std::vector<Edge>{{0, 0}, {1, 1}});
  const Matching out = augment_with_wings(m0, right, left);
  EXPECT_EQ(out.size(), 4u);
  EXPECT_EQ(out.edges(),
            (std::vector<Edge>{{0, 0}, {1, 1}, {2, 2}, {3, 3}}));
}

TEST(AugmentWithWings, PicksSmallestRightWing) {
  // b = 0 has right wings from c = 3 and c = 1.
  const Matching m0 = matching_from_edges(4, 2, std::vector<Edge>{{0, 0}});
  const std::vector<Edge> right = {{3, 0}, {1, 0}};
  const Matching left = matching_from_edges(4, 2, std::vector<Edge>{{0, 1}});
  const Matching out = augment_with_wings(m0, right, left);
  EXPECT_EQ(out.edges(), (std::vector<Edge>{{0, 1}, {1, 0}}));
}

TEST(AugmentWithWings, PreconditionViolations) {
  const Matching m0 = matching_from_edges(4, 4, std::vector<Edge>{{0, 2}, {1, 3}});
  const Matching left = matching_from_edges(4, 4, std::vector<Edge>{{0, 0}});
  // Missing right wing at b = 2.
  EXPECT_THROW(augment_with_wings(m0, std::vector<Edge>{{3, 3}}, left),
               WingError);
  // Right wing whose A endpoint is matched in M0.
  EXPECT_THROW(augment_with_wings(m0, std::vector<Edge>{{1, 2}}, left),
               WingError);
  // Right wing on an unmatched B vertex.
  EXPECT_THROW(augment_with_wings(m0, std::vector<Edge>{{2, 0}}, left),
               WingError);
  // Same free A vertex used twice.
  EXPECT_THROW(
      augment_with_wings(m0, std::vector<Edge>{{2, 2}, {2, 3}}, left),
      WingError);
  // Left wing from an A vertex not in M0.
  EXPECT_THROW(augment_with_wings(m0, std::vector<Edge>{{2, 2}},
                                  matching_from_edges(4, 4, std::vector<Edge>{{3, 0}})),
               WingError);
  // Left wing into a matched B vertex.
  EXPECT_THROW(augment_with_wings(m0, std::vector<Edge>{{2, 2}},
                                  matching_from_edges(4, 4, std::vector<Edge>{{0, 3}})),
               WingError);
}

TEST(OnePass, SingleEdge) {
  Stream s(1, 1, {{0, 0}});
  StreamSource src(s.graph, s.order);
  const OnePassTrace t = one_pass_random_order_trace(src);
  EXPECT_EQ(t.phase1_end, 0u);
  EXPECT_TRUE(t.m0.empty());
  EXPECT_TRUE(t.m1.empty());
  EXPECT_TRUE(t.m2.empty());
  EXPECT_EQ(t.output.edges(), (std::vector<Edge>{{0, 0}}));
  EXPECT_EQ(src.passes_opened(), 1);
}

TEST(OnePass, HalfTrapWingFriendlyOrder) {
  Stream s = wing_friendly_half_trap();
  StreamSource src(s.graph, s.order);
  const OnePassTrace t = one_pass_random_order_trace(src);
  EXPECT_EQ(t.phase1_end, 2u);
  EXPECT_EQ(t.phase2_end, 4u);
  EXPECT_EQ(t.m0.edges(), (std::vector<Edge>{{0, 2}, {1, 3}}));
  EXPECT_EQ(t.m1.edges(), (std::vector<Edge>{{2, 2}, {3, 3}}));
  EXPECT_EQ(t.m2.edges(), (std::vector<Edge>{{0, 0}, {1, 1}}));
  EXPECT_EQ(t.greedy_all.size(), 2u);
  EXPECT_EQ(t.output.size(), 4u);
  EXPECT_EQ(src.passes_opened(), 1);
}

TEST(OnePass, TieReturnsAugmented) {
  // m = 2: phase 1 is empty, greedy and augmented differ as edge sets.
  Stream s(2, 2, {{0, 0}, {1, 1}});
  StreamSource src(s.graph, s.order);
  const OnePassTrace t = one_pass_random_order_trace(src, {0.5, 0.75});
  ASSERT_EQ(t.phase1_end, 1u);
  // augmented = M0 = {(0,0)} of size 1 < greedy 2, so greedy wins here.
  EXPECT_EQ(t.output, t.greedy_all);

  Stream tie(1, 1, {{0, 0}});
  StreamSource src2(tie.graph, tie.order);
  const OnePassTrace t2 = one_pass_random_order_trace(src2, {0.5, 0.75});
  EXPECT_EQ(t2.augmented.size(), 0u);
  EXPECT_EQ(t2.output, t2.greedy_all);

  // Equal sizes with distinct edge sets: the augmented matching is returned.
  // Phase 1 keeps (0,0); (1,0) is its right wing, (0,1) its left wing, and
  // plain greedy picks up (2,2) instead.
  Stream eq(3, 3, {{0, 0}, {1, 0}, {2, 2}, {0, 1}});
  StreamSource src3(eq.graph, eq.order);
  const OnePassTrace t3 = one_pass_random_order_trace(src3, {0.25, 0.75});
  EXPECT_EQ(t3.greedy_all.edges(), (std::vector<Edge>{{0, 0}, {2, 2}}));
  EXPECT_EQ(t3.augmented.edges(), (std::vector<Edge>{{0, 1}, {1, 0}}));
  EXPECT_EQ(t3.output, t3.augmented);
}

TEST(OnePass, RejectsBadSplit) {
  Stream s(1, 1, {{0, 0}});
  StreamSource src(s.graph, s.order);
  EXPECT_THROW(one_pass_random_order(src, {0.6, 0.7}), std::invalid_argument);
  EXPECT_THROW(one_pass_random_order(src, {0.4, 0.5}), std::invalid_argument);
  EXPECT_THROW(one_pass_random_order(src, {0.4, 1.0}), std::invalid_argument);
  EXPECT_EQ(src.passes_opened(), 0);
}

TEST(TwoPassRandomized, EmptySampleGivesM0) {
  auto [g, order] = gen_half_trap(3);
  StreamSource src(g, order);
  const TwoPassTrace t = two_pass_randomized_trace(src, sample_of(6, {}));
  EXPECT_EQ(t.output, t.m0);
  EXPECT_EQ(src.passes_opened(), 2);
}

TEST(TwoPassRandomized, HalfTrapInjectedSample) {
  auto [g, order] = gen_half_trap(2);
  StreamSource src(g, order);
  const TwoPassTrace t = two_pass_randomized_trace(src, sample_of(4, {2, 3}));
  EXPECT_EQ(t.m0.size(), 2u);
  EXPECT_EQ(t.m1, (std::vector<Edge>{{2, 2}, {3, 3}}));
  EXPECT_EQ(t.m2.edges(), (std::vector<Edge>{{0, 0}, {1, 1}}));
  EXPECT_EQ(t.output.size(), 4u);
  EXPECT_EQ(src.passes_opened(), 2);
}

TEST(TwoPassRandomized, SeededOverloadMatchesInjected) {
  auto [g, order] = gen_half_trap(40);
  StreamSource a(g, order);
  StreamSource b(g, order);
  EXPECT_EQ(two_pass_randomized(a, 0.3, 11),
            two_pass_randomized(b, sample_vertex_subset(g.n_a(), 0.3, 11)));
}

TEST(TwoPassDeterministic, SingleEdge) {
  Stream s(1, 1, {{0, 0}});
  StreamSource src(s.graph, s.order);
  EXPECT_EQ(two_pass_deterministic(src).edges(), (std::vector<Edge>{{0, 0}}));
  EXPECT_EQ(src.passes_opened(), 2);
}

TEST(TwoPassDeterministic, HalfTrapAdversarial) {
  auto [g, order] = gen_half_trap(2);
  StreamSource src(g, order);
  const TwoPassTrace t = two_pass_deterministic_trace(src, 3);
  EXPECT_EQ(t.m0.edges(), (std::vector<Edge>{{0, 2}, {1, 3}}));
  EXPECT_EQ(sorted(t.m1), (std::vector<Edge>{{2, 2}, {3, 3}}));
  EXPECT_EQ(t.m2.edges(), (std::vector<Edge>{{0, 0}, {1, 1}}));
  EXPECT_EQ(t.output.size(), 4u);
  EXPECT_EQ(src.passes_opened(), 2);
}

TEST(TwoPassDeterministic, MultipleWingsPerBVertex) {
  // M0 = {(0,0)}; S gives B vertex 0 wings from A vertices 1 and 2.
  Stream s(3, 2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}});
  StreamSource src(s.graph, s.order);
  const TwoPassTrace t = two_pass_deterministic_trace(src, 3);
  EXPECT_EQ(t.m1, (std::vector<Edge>{{1, 0}, {2, 0}}));
  EXPECT_EQ(t.output.edges(), (std::vector<Edge>{{0, 1}, {1, 0}}));
}

TEST(TwoPassDeterministic, RejectsSmallLambda) {
  Stream s(1, 1, {{0, 0}});
  StreamSource src(s.graph, s.order);
  EXPECT_THROW(two_pass_deterministic(src, 1), std::invalid_argument);
}

TEST(DeterministicFloor, ExactThreshold) {
  EXPECT_DOUBLE_EQ(deterministic_floor_ratio(3), 0.5 + 1.0 / 52.0);
  // 27/52 is the floor for lambda = 3.
  EXPECT_TRUE(meets_deterministic_floor(27, 52, 3));
  EXPECT_FALSE(meets_deterministic_floor(26, 52, 3));
  EXPECT_TRUE(meets_deterministic_floor(0, 0, 3));
  EXPECT_DOUBLE_EQ(deterministic_floor_ratio(2), 0.5 + 1.0 / 54.0);
  EXPECT_TRUE(meets_deterministic_floor(1, 2, 1));
}

}  // namespace
}  // namespace semistream
