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

#include "bmp/recognition.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "bmp/families.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace bmp {
namespace {

using ::testing::ElementsAre;

// Each vertex's later neighbours form a clique.
bool IsPerfectEliminationOrder(const oracle::Raw& r,
                               const std::vector<Vertex>& order) {
  if (static_cast<int>(order.size()) != r.n) return false;
  std::vector<int> position(r.n, -1);
  for (int i = 0; i < r.n; ++i) {
    if (order[i] < 0 || order[i] >= r.n || position[order[i]] >= 0) return false;
    position[order[i]] = i;
  }
  for (int v = 0; v < r.n; ++v) {
    for (int a = 0; a < r.n; ++a) {
      for (int b = a + 1; b < r.n; ++b) {
        if (r.adj[v][a] && r.adj[v][b] && position[a] > position[v] &&
            position[b] > position[v] && !r.adj[a][b]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool IsChordlessCycle(const oracle::Raw& r, const std::vector<Vertex>& c) {
  const int len = static_cast<int>(c.size());
  if (len < 4 || std::set<Vertex>(c.begin(), c.end()).size() != c.size()) {
    return false;
  }
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (static_cast<bool>(r.adj[c[i]][c[j]]) != consecutive) return false;
    }
  }
  return true;
}

TEST(IsChordal, C4GivesItsCycle) {
  const ChordalityWitness w = IsChordal(CycleGraph(4));
  EXPECT_FALSE(w.chordal);
  EXPECT_THAT(w.chordless_cycle, ElementsAre(0, 1, 2, 3));
  EXPECT_TRUE(w.elimination_order.empty());
  EXPECT_TRUE(VerifyChordalityWitness(CycleGraph(4), w));
}

TEST(IsChordal, TreesAreChordal) {
  for (int seed = 0; seed < 20; ++seed) {
    const Graph t = RandomTree(1 + seed, seed);
    const ChordalityWitness w = IsChordal(t);
    ASSERT_TRUE(w.chordal);
    EXPECT_TRUE(IsPerfectEliminationOrder(oracle::FromGraph(t),
                                          w.elimination_order));
    if (t.num_vertices() > 1) {
      EXPECT_EQ(t.degree(w.elimination_order.front()), 1);
    }
  }
}

TEST(IsChordal, K4MinusAnEdge) {
  const Graph g = MakeGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const ChordalityWitness w = IsChordal(g);
  ASSERT_TRUE(w.chordal);
  const oracle::Raw raw = oracle::FromGraph(g);
  std::vector<Vertex> order{0, 1, 2, 3};
  std::set<std::vector<Vertex>> peos;
  do {
    if (IsPerfectEliminationOrder(raw, order)) peos.insert(order);
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_EQ(peos.size(), 12u);
  EXPECT_TRUE(peos.count(w.elimination_order));
  EXPECT_EQ(g.degree(w.elimination_order.front()), 2);
}

TEST(IsChordal, WorksOnDisconnectedGraphs) {
  const Graph two_triangles =
      MakeGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_TRUE(IsChordal(two_triangles).chordal);
  const Graph c4_plus_vertex = MakeGraph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const ChordalityWitness w = IsChordal(c4_plus_vertex);
  EXPECT_FALSE(w.chordal);
  EXPECT_TRUE(VerifyChordalityWitness(c4_plus_vertex, w));
}

TEST(IsChordal, SunsAndFamilyGraphs) {
  EXPECT_TRUE(IsChordal(SunGraph(3)).chordal);
  EXPECT_TRUE(IsChordal(SunGraph(5)).chordal);
  EXPECT_FALSE(IsChordal(PetersenGraph()).chordal);
  EXPECT_FALSE(IsChordal(CompleteBipartiteGraph(2, 3)).chordal);
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(IsChordal(GenerateGk(k)).chordal);
}

TEST(VerifyChordalityWitness, RejectsForgeries) {
  const Graph c5 = CycleGraph(5);
  ChordalityWitness w = IsChordal(c5);
  ASSERT_TRUE(VerifyChordalityWitness(c5, w));
  ChordalityWitness claims_chordal{true, {0, 1, 2, 3, 4}, {}};
  EXPECT_FALSE(VerifyChordalityWitness(c5, claims_chordal));
  ChordalityWitness short_cycle{false, {}, {0, 1, 2}};
  EXPECT_FALSE(VerifyChordalityWitness(c5, short_cycle));

  const Graph g = MakeGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {3, 4}});
  ChordalityWitness chorded{false, {}, {0, 1, 2, 3}};
  EXPECT_FALSE(VerifyChordalityWitness(g, chorded));
  ChordalityWitness not_a_permutation{true, {0, 0, 1, 2, 3}, {}};
  EXPECT_FALSE(VerifyChordalityWitness(g, not_a_permutation));
}

class RecognitionProperties : public ::testing::TestWithParam<int> {};

TEST_P(RecognitionProperties, AgreesWithSimplicialElimination) {
  oracle::Fuzz fuzz(100 + GetParam());
  for (int round = 0; round < 20; ++round) {
    const int n = fuzz.Int(1, 12);
    const Graph g = round % 2 ? fuzz.Chordal(n, fuzz.Int(1, 4))
                              : fuzz.Connected(n, fuzz.Int(0, 40) / 100.0);
    const oracle::Raw raw = oracle::FromGraph(g);
    const ChordalityWitness w = IsChordal(g);
    ASSERT_EQ(w.chordal, oracle::IsChordal(raw)) << FormatEdgeList(g);
    EXPECT_TRUE(VerifyChordalityWitness(g, w));
    if (w.chordal) {
      EXPECT_TRUE(IsPerfectEliminationOrder(raw, w.elimination_order));
    } else {
      EXPECT_TRUE(IsChordlessCycle(raw, w.chordless_cycle));
      EXPECT_EQ(w.chordless_cycle[0],
                *std::min_element(w.chordless_cycle.begin(),
                                  w.chordless_cycle.end()));
      EXPECT_LT(w.chordless_cycle[1], w.chordless_cycle.back());
    }
  }
}

TEST_P(RecognitionProperties, HyperbolicityMatchesPlainScan) {
  oracle::Fuzz fuzz(200 + GetParam());
  for (int round = 0; round < 10; ++round) {
    const Graph g = fuzz.Connected(fuzz.Int(1, 16), fuzz.Int(0, 40) / 100.0);
    EXPECT_EQ(Hyperbolicity(g).twice_value(),
              oracle::HyperbolicityTwice(oracle::FromGraph(g)));
  }
}

TEST_P(RecognitionProperties, HyperbolicityIsInvariantUnderRelabeling) {
  oracle::Fuzz fuzz(300 + GetParam());
  for (int round = 0; round < 10; ++round) {
    const int n = fuzz.Int(1, 18);
    const Graph g = fuzz.Connected(n, fuzz.Int(0, 30) / 100.0);
    const Graph h = oracle::Permute(g, fuzz.Permutation(n));
    EXPECT_EQ(Hyperbolicity(g), Hyperbolicity(h));
    EXPECT_EQ(IsChordal(g).chordal, IsChordal(h).chordal);
  }
}

TEST_P(RecognitionProperties, ChordalGraphsAreOneHyperbolic) {
  oracle::Fuzz fuzz(400 + GetParam());
  for (int round = 0; round < 10; ++round) {
    const int n = fuzz.Int(1, 25);
    const Graph a = fuzz.Chordal(n, fuzz.Int(1, 5));
    const Graph b = RandomChordalGraph(n, fuzz.Int(0, 100) / 100.0,
                                       1000 * GetParam() + round);
    ASSERT_TRUE(IsChordal(b).chordal);
    EXPECT_LE(Hyperbolicity(a), HalfInteger::FromInteger(1));
    EXPECT_LE(Hyperbolicity(b), HalfInteger::FromInteger(1));
  }
}

INSTANTIATE_TEST_SUITE_P(Fuzz, RecognitionProperties, ::testing::Range(0, 20));

TEST(Hyperbolicity, SpecExamples) {
  for (int seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(Hyperbolicity(RandomTree(2 + 3 * seed, seed)).twice_value(), 0);
  }
  EXPECT_EQ(Hyperbolicity(CycleGraph(4)), HalfInteger::FromInteger(1));
  EXPECT_EQ(Hyperbolicity(CycleGraph(5)).ToString(), "1/2");
  EXPECT_EQ(Hyperbolicity(CompleteGraph(3)).twice_value(), 0);
  EXPECT_EQ(Hyperbolicity(CompleteGraph(1)).twice_value(), 0);
  EXPECT_EQ(Hyperbolicity(CompleteGraph(6)).twice_value(), 0);
  EXPECT_BMP_ERROR(Hyperbolicity(MakeGraph(4, {{0, 1}, {2, 3}})),
                   ErrorCode::kDisconnectedGraph);
}

TEST(HalfInteger, ParsesAndFormats) {
  EXPECT_EQ(HalfInteger::Parse("0").twice_value(), 0);
  EXPECT_EQ(HalfInteger::Parse("1/2").twice_value(), 1);
  EXPECT_EQ(HalfInteger::Parse("3/2").twice_value(), 3);
  EXPECT_EQ(HalfInteger::Parse("1.5").twice_value(), 3);
  EXPECT_EQ(HalfInteger::Parse("2").twice_value(), 4);
  EXPECT_EQ(HalfInteger::Parse("4/2").twice_value(), 4);
  EXPECT_EQ(HalfInteger::FromTwice(3).ToString(), "3/2");
  EXPECT_EQ(HalfInteger::FromTwice(4).ToString(), "2");
  EXPECT_BMP_ERROR(HalfInteger::Parse("abc"), ErrorCode::kParseError);
  EXPECT_BMP_ERROR(HalfInteger::Parse("1/3"), ErrorCode::kInvalidParams);
  EXPECT_BMP_ERROR(HalfInteger::Parse("-1"), ErrorCode::kInvalidParams);
  EXPECT_LT(HalfInteger::FromTwice(1), HalfInteger::FromInteger(1));
}

}  // namespace
}  // namespace bmp
