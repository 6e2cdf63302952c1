// Copyright 2026 The bmp Authors
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

#include "bmp/solvers.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "bmp/families.hpp"
#include "bmp/lp.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace bmp {
namespace {

using ::testing::ElementsAre;

const Multipacking& MpWitness(const SolveReport& r) {
  return std::get<Multipacking>(r.witness);
}
const Broadcast& BroadcastWitness(const SolveReport& r) {
  return std::get<Broadcast>(r.witness);
}

TEST(SolveMultipackingNumber, SpecExamples) {
  EXPECT_EQ(SolveMultipackingNumber(CycleGraph(4)).optimum, 1);
  const SolveReport p7 = SolveMultipackingNumber(PathGraph(7));
  EXPECT_EQ(p7.optimum, 3);
  EXPECT_THAT(MpWitness(p7).members, ElementsAre(0, 3, 6));
  EXPECT_EQ(SolveMultipackingNumber(GenerateGk(1)).optimum, 5);
  EXPECT_EQ(SolveMultipackingNumber(GenerateGk(2)).optimum, 9);
  EXPECT_EQ(SolveMultipackingNumber(CompleteGraph(1)).optimum, 1);
}

TEST(SolveMultipackingNumber, TraceEndsAtOptimum) {
  const SolveReport r = SolveMultipackingNumber(GenerateGk(2));
  ASSERT_FALSE(r.bounds_trace.empty());
  EXPECT_EQ(r.bounds_trace.back().first, 9);
  for (const auto& [lo, hi] : r.bounds_trace) EXPECT_LE(lo, hi);
  EXPECT_GT(r.nodes, 0);
  EXPECT_TRUE(CheckMultipacking(GenerateGk(2), MpWitness(r)).valid);
}

TEST(SolveBroadcastNumber, SpecExamples) {
  EXPECT_EQ(SolveBroadcastNumber(CycleGraph(4)).optimum, 2);
  for (int n = 2; n <= 7; ++n) {
    EXPECT_EQ(SolveBroadcastNumber(CompleteGraph(n)).optimum, 1);
  }
  const SolveReport g2 = SolveBroadcastNumber(GenerateGk(2));
  EXPECT_EQ(g2.optimum, 10);
  const BroadcastCheck c = CheckBroadcast(GenerateGk(2), BroadcastWitness(g2));
  EXPECT_TRUE(c.dominating);
  EXPECT_EQ(c.cost, 10);
  EXPECT_EQ(SolveBroadcastNumber(PathGraph(7)).optimum, 3);
}

TEST(Solvers, Errors) {
  const Graph split = MakeGraph(4, {{0, 1}, {2, 3}});
  EXPECT_BMP_ERROR(SolveMultipackingNumber(split), ErrorCode::kDisconnectedGraph);
  EXPECT_BMP_ERROR(SolveBroadcastNumber(split), ErrorCode::kDisconnectedGraph);
  EXPECT_BMP_ERROR(SolveBroadcastNumber(CompleteGraph(1)),
                   ErrorCode::kTrivialGraph);
  SolveOptions small;
  small.max_vertices = 6;
  EXPECT_BMP_ERROR(SolveMultipackingNumber(PathGraph(7), small),
                   ErrorCode::kSizeLimitExceeded);
  EXPECT_BMP_ERROR(SolveBroadcastNumber(PathGraph(7), small),
                   ErrorCode::kSizeLimitExceeded);
  EXPECT_NO_THROW(SolveBroadcastNumber(PathGraph(6), small));
  EXPECT_BMP_ERROR(ApproximateMultipacking(split), ErrorCode::kDisconnectedGraph);
  EXPECT_BMP_ERROR(ComputeApproxGuarantee(CycleGraph(5), GuaranteeKind::kChordal),
                   ErrorCode::kNotChordal);
}

TEST(ApproximateMultipacking, SpecExamples) {
  const ApproxReport p7 = ApproximateMultipacking(PathGraph(7));
  EXPECT_THAT(p7.multipacking.members, ElementsAre(0, 3, 6));
  EXPECT_EQ(p7.guarantee, 3);
  EXPECT_EQ(p7.path.size(), 7u);
  EXPECT_THAT(ApproximateMultipacking(CompleteGraph(2)).multipacking.members,
              ElementsAre(0));
  EXPECT_EQ(ApproximateMultipacking(CycleGraph(4)).multipacking.members.size(),
            1u);
}

TEST(ApproxGuarantee, SpecExamples) {
  const ApproxGuarantee p4 =
      ComputeApproxGuarantee(PathGraph(4), GuaranteeKind::kChordal);
  EXPECT_EQ(p4.radius, 2);
  EXPECT_EQ(p4.diameter, 3);
  EXPECT_EQ(p4.radius_guarantee, 1);
  EXPECT_EQ(p4.approx_size, 2);
  EXPECT_TRUE(p4.chain_holds);

  const ApproxGuarantee tree =
      ComputeApproxGuarantee(PathGraph(7), GuaranteeKind::kHyperbolic);
  EXPECT_EQ(tree.delta.twice_value(), 0);
  EXPECT_EQ(tree.ForMultipackingNumber(3), 2);
  EXPECT_LE(tree.ForMultipackingNumber(3), tree.approx_size);

  const ApproxGuarantee supplied = ComputeApproxGuarantee(
      PathGraph(7), GuaranteeKind::kHyperbolic, HalfInteger::FromInteger(1));
  EXPECT_EQ(supplied.delta.twice_value(), 2);
  EXPECT_EQ(supplied.radius_guarantee, CeilDiv(2 * 3 - 4, 3));

  // delta = 1 never beats the chordal bound.
  const Graph sun = SunGraph(3);
  const ApproxGuarantee chordal = ComputeApproxGuarantee(sun, GuaranteeKind::kChordal);
  const ApproxGuarantee hyper = ComputeApproxGuarantee(
      sun, GuaranteeKind::kHyperbolic, HalfInteger::FromInteger(1));
  for (int mp = 1; mp <= 20; ++mp) {
    EXPECT_LE(hyper.ForMultipackingNumber(mp), chordal.ForMultipackingNumber(mp));
  }
}

TEST(BoundReport, SpecExamples) {
  const BoundReport c4 = ComputeBoundReport(CycleGraph(4));
  EXPECT_EQ(c4.mp, 1);
  EXPECT_EQ(c4.gamma_b, 2);
  EXPECT_EQ(c4.delta.twice_value(), 2);
  EXPECT_TRUE(c4.all_hold());
  EXPECT_LE(*c4.gamma_b, FloorDiv(3 * 1 + 2 * 2, 2));
  EXPECT_EQ(FloorDiv(3 * 1 + 2 * 2, 2), 3);

  const BoundReport g2 = ComputeBoundReport(GenerateGk(2));
  EXPECT_EQ(g2.mp, 9);
  EXPECT_EQ(g2.gamma_b, 10);
  EXPECT_EQ(g2.mp_f, 10);
  EXPECT_TRUE(g2.chordal);
  EXPECT_EQ(CeilDiv(27, 2), 14);
  EXPECT_TRUE(g2.all_hold());

  for (int seed = 0; seed < 10; ++seed) {
    const BoundReport t = ComputeBoundReport(RandomTree(3 + seed, seed));
    EXPECT_EQ(t.mp, t.gamma_b);
  }
}

TEST(BoundReport, BoundsOnlyAboveTheGuard) {
  SolveOptions small;
  small.max_vertices = 10;
  const BoundReport r = ComputeBoundReport(GenerateGk(1), small);
  EXPECT_FALSE(r.exact);
  EXPECT_FALSE(r.mp.has_value());
  EXPECT_FALSE(r.gamma_b.has_value());
  EXPECT_LE(r.mp_lower, 5);
  EXPECT_GE(r.mp_upper, 5);
  EXPECT_LE(r.gamma_b_lower, 5);
  EXPECT_GE(r.gamma_b_upper, 5);
  EXPECT_TRUE(r.all_hold());
  EXPECT_BMP_ERROR(ComputeBoundReport(CompleteGraph(1)), ErrorCode::kTrivialGraph);
}

TEST(CeilFloorDiv, NegativeNumerators) {
  EXPECT_EQ(CeilDiv(-1, 3), 0);
  EXPECT_EQ(CeilDiv(-4, 3), -1);
  EXPECT_EQ(FloorDiv(-1, 2), -1);
  EXPECT_EQ(FloorDiv(7, 2), 3);
  EXPECT_EQ(CeilDiv(7, 2), 4);
}

class SolverProperties : public ::testing::TestWithParam<int> {};

TEST_P(SolverProperties, MatchOraclesAndBounds) {
  oracle::Fuzz fuzz(1200 + GetParam());
  for (int round = 0; round < 6; ++round) {
    const int n = fuzz.Int(2, 10);
    const Graph g = round % 2 ? fuzz.Chordal(n, fuzz.Int(1, 4))
                              : fuzz.Connected(n, fuzz.Int(5, 40) / 100.0);
    const oracle::Raw raw = oracle::FromGraph(g);
    const SolveReport mp = SolveMultipackingNumber(g);
    const SolveReport gb = SolveBroadcastNumber(g);
    const oracle::BroadcastOracle want = oracle::BroadcastNumber(raw);
    ASSERT_EQ(mp.optimum, oracle::MultipackingNumber(raw)) << FormatEdgeList(g);
    ASSERT_EQ(gb.optimum, want.gamma_b) << FormatEdgeList(g);
    EXPECT_TRUE(want.efficient_optimum);

    const Multipacking& m = MpWitness(mp);
    EXPECT_EQ(static_cast<int>(m.members.size()), mp.optimum);
    EXPECT_TRUE(oracle::IsMultipacking(raw, m.members));
    const Broadcast& b = BroadcastWitness(gb);
    EXPECT_EQ(b.cost(), gb.optimum);
    EXPECT_TRUE(oracle::Dominates(raw, b.radius));

    SolveOptions efficient;
    efficient.efficient_only = true;
    const SolveReport eff = SolveBroadcastNumber(g, efficient);
    EXPECT_EQ(eff.optimum, gb.optimum);
    EXPECT_TRUE(oracle::Efficient(raw, BroadcastWitness(eff).radius));
    EXPECT_TRUE(oracle::Dominates(raw, BroadcastWitness(eff).radius));

    const int twice = oracle::HyperbolicityTwice(raw);
    EXPECT_LE(gb.optimum, 2 * mp.optimum + 3);
    EXPECT_LE(gb.optimum, FloorDiv(3 * mp.optimum + 2 * twice, 2));
    const bool chordal = oracle::IsChordal(raw);
    if (chordal) {
      EXPECT_LE(gb.optimum, CeilDiv(3 * mp.optimum, 2));
    }

    const ApproxReport approx = ApproximateMultipacking(g);
    const int d = oracle::Diameter(raw);
    EXPECT_EQ(static_cast<int>(approx.multipacking.members.size()),
              CeilDiv(d + 1, 3));
    EXPECT_EQ(approx.guarantee, CeilDiv(d + 1, 3));
    EXPECT_TRUE(oracle::IsMultipacking(raw, approx.multipacking.members));
    EXPECT_EQ(static_cast<int>(approx.path.size()), d + 1);
    EXPECT_EQ(raw.dist[approx.path.front()][approx.path.back()], d);
    EXPECT_GE(CeilDiv(d + 1, 3), CeilDiv(2 * mp.optimum - 2 * twice, 3));
    if (chordal) {
      EXPECT_GE(CeilDiv(d + 1, 3), CeilDiv(2 * mp.optimum - 1, 3));
      const ApproxGuarantee guarantee =
          ComputeApproxGuarantee(g, GuaranteeKind::kChordal);
      EXPECT_TRUE(guarantee.chain_holds);
      EXPECT_LE(guarantee.ForMultipackingNumber(mp.optimum), guarantee.approx_size);
    }
    const ApproxGuarantee hyper = ComputeApproxGuarantee(g, GuaranteeKind::kHyperbolic);
    EXPECT_TRUE(hyper.chain_holds);
    EXPECT_LE(hyper.ForMultipackingNumber(mp.optimum), hyper.approx_size);

    const BoundReport report = ComputeBoundReport(g);
    EXPECT_TRUE(report.all_hold());
    EXPECT_EQ(report.mp, mp.optimum);
    EXPECT_EQ(report.gamma_b, gb.optimum);
  }
}

TEST_P(SolverProperties, DeterministicReports) {
  oracle::Fuzz fuzz(1300 + GetParam());
  const Graph g = fuzz.Connected(fuzz.Int(2, 12), 0.25);
  const SolveReport a = SolveBroadcastNumber(g);
  const SolveReport b = SolveBroadcastNumber(g);
  EXPECT_EQ(a.nodes, b.nodes);
  EXPECT_EQ(BroadcastWitness(a).radius, BroadcastWitness(b).radius);
  EXPECT_EQ(a.bounds_trace, b.bounds_trace);
  const SolveReport c = SolveMultipackingNumber(g);
  const SolveReport d = SolveMultipackingNumber(g);
  EXPECT_EQ(MpWitness(c).members, MpWitness(d).members);
  EXPECT_EQ(c.nodes, d.nodes);
}

TEST_P(SolverProperties, TreesHaveEqualNumbers) {
  oracle::Fuzz fuzz(1400 + GetParam());
  const Graph t = fuzz.Tree(fuzz.Int(2, 14));
  EXPECT_EQ(SolveMultipackingNumber(t).optimum, SolveBroadcastNumber(t).optimum);
}

INSTANTIATE_TEST_SUITE_P(Fuzz, SolverProperties, ::testing::Range(0, 25));

}  // namespace
}  // namespace bmp
