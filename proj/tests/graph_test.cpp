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

#include "bmp/graph.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>

#include "bmp/families.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace bmp {
namespace {

using ::testing::ElementsAre;

TEST(Graph, EdgesAreCanonicalAndSorted) {
  const Graph g = MakeGraph(4, {{3, 2}, {1, 0}, {2, 0}});
  ASSERT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
  EXPECT_EQ(g.edges()[2], (Edge{2, 3}));
  EXPECT_TRUE(g.adjacent(3, 2));
  EXPECT_FALSE(g.adjacent(1, 3));
  EXPECT_EQ(g.degree(0), 2);
}

TEST(Graph, RejectsLoopsDuplicatesAndBadVertices) {
  EXPECT_BMP_ERROR(MakeGraph(3, {{1, 1}}), ErrorCode::kInvalidParams);
  EXPECT_BMP_ERROR(MakeGraph(3, {{0, 1}, {1, 0}}), ErrorCode::kInvalidParams);
  EXPECT_BMP_ERROR(MakeGraph(3, {{0, 3}}), ErrorCode::kInvalidVertex);
  EXPECT_BMP_ERROR(MakeGraph(3, {{-1, 2}}), ErrorCode::kInvalidVertex);
}

TEST(BfsDistances, SpecExamples) {
  EXPECT_THAT(BfsDistances(PathGraph(4), 0), ElementsAre(0, 1, 2, 3));
  EXPECT_THAT(BfsDistances(CompleteGraph(3), 1), ElementsAre(1, 0, 1));
  EXPECT_THAT(BfsDistances(MakeGraph(2, {}), 0), ElementsAre(0, kUnreachable));
  EXPECT_BMP_ERROR(BfsDistances(PathGraph(4), 4), ErrorCode::kInvalidVertex);
}

TEST(Metrics, SpecExamples) {
  const GraphMetrics p5 = ComputeMetrics(PathGraph(5));
  EXPECT_EQ(p5.radius, 2);
  EXPECT_EQ(p5.diameter, 4);
  EXPECT_THAT(p5.center, ElementsAre(2));

  const GraphMetrics c4 = ComputeMetrics(CycleGraph(4));
  EXPECT_EQ(c4.radius, 2);
  EXPECT_EQ(c4.diameter, 2);
  EXPECT_THAT(c4.center, ElementsAre(0, 1, 2, 3));

  const GraphMetrics k1 = ComputeMetrics(CompleteGraph(1));
  EXPECT_EQ(k1.radius, 0);
  EXPECT_EQ(k1.diameter, 0);
  EXPECT_THAT(k1.center, ElementsAre(0));

  EXPECT_BMP_ERROR(ComputeMetrics(MakeGraph(3, {{0, 1}})),
                   ErrorCode::kDisconnectedGraph);
}

TEST(Ball, SpecExamples) {
  EXPECT_THAT(Ball(PathGraph(5), 2, 1), ElementsAre(1, 2, 3));
  EXPECT_THAT(Ball(CycleGraph(4), 0, 2), ElementsAre(0, 1, 2, 3));
  EXPECT_THAT(Ball(PathGraph(5), 0, 10), ElementsAre(0, 1, 2, 3, 4));
  EXPECT_THAT(Ball(PathGraph(5), 3, 0), ElementsAre(3));
  EXPECT_BMP_ERROR(Ball(PathGraph(5), 5, 1), ErrorCode::kInvalidVertex);
}

TEST(DiametralPath, SpecExamples) {
  EXPECT_THAT(DiametralPath(PathGraph(5)), ElementsAre(0, 1, 2, 3, 4));
  EXPECT_THAT(DiametralPath(CompleteGraph(3)), ElementsAre(0, 1));
  // C_4: the smallest pair at distance 2 is (0, 2); of its two geodesics
  // 0-1-2 and 0-3-2 the tie-break keeps the lower-index middle vertex.
  EXPECT_THAT(DiametralPath(CycleGraph(4)), ElementsAre(0, 1, 2));
  EXPECT_THAT(DiametralPath(CompleteGraph(1)), ElementsAre(0));
  EXPECT_BMP_ERROR(DiametralPath(MakeGraph(2, {})),
                   ErrorCode::kDisconnectedGraph);
}

TEST(EdgeList, ParsesCommentsAndBlankLines) {
  const Graph g = ParseEdgeList(
      "# a path\n"
      "\n"
      "3 2\n"
      "0 1\n"
      "   # inline comment line\n"
      "1 2\n"
      "\n");
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_EQ(FormatEdgeList(g), "3 2\n0 1\n1 2\n");
}

TEST(EdgeList, RoundTrips) {
  const Graph g = PetersenGraph();
  const Graph h = ParseEdgeList(FormatEdgeList(g));
  EXPECT_EQ(h.num_vertices(), g.num_vertices());
  EXPECT_EQ(h.edges(), g.edges());
}

std::string ParseErrorOf(std::string_view text) {
  try {
    ParseEdgeList(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    return e.what();
  }
  ADD_FAILURE() << "no parse error";
  return {};
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  EXPECT_NE(ParseErrorOf("").find("header"), std::string::npos);
  EXPECT_NE(ParseErrorOf("3 2\n0 1\n1 x\n").find("line 3"), std::string::npos);
  EXPECT_NE(ParseErrorOf("3 2\n0 1\n").find("expected 2 edge lines"),
            std::string::npos);
  EXPECT_NE(ParseErrorOf("3 1\n0 1\n1 2\n").find("line 3"), std::string::npos);
  EXPECT_NE(ParseErrorOf("3 1\n2 1\n").find("line 2"), std::string::npos);
  EXPECT_NE(ParseErrorOf("3 1\n0 3\n").find("line 2"), std::string::npos);
  EXPECT_NE(ParseErrorOf("3 2\n0 1\n# c\n0 1\n").find("line 4"),
            std::string::npos);
  EXPECT_NE(ParseErrorOf("3 1 7\n0 1\n").find("line 1"), std::string::npos);
  EXPECT_NE(ParseErrorOf("-1 0\n").find("line 1"), std::string::npos);
}

TEST(LabelMap, ListsEveryVertex) {
  const Graph g = GenerateGk(1);
  const std::string map = FormatLabelMap(g);
  EXPECT_EQ(map.substr(0, 10), "0 b_{1,1}\n");
  EXPECT_NE(map.find("20 b_{1,21}\n"), std::string::npos);
  EXPECT_EQ(FormatLabelMap(PathGraph(3)), "");
}

class GraphProperties : public ::testing::TestWithParam<int> {};

TEST_P(GraphProperties, DistancesMatchFloydWarshall) {
  oracle::Fuzz fuzz(1000 + GetParam());
  const int n = fuzz.Int(1, 64);
  const Graph g = fuzz.Connected(n, fuzz.Int(0, 10) / 100.0);
  const oracle::Raw raw = oracle::FromGraph(g);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      ASSERT_EQ(g.distance(u, v), raw.dist[u][v]);
      EXPECT_EQ(g.distance(u, v) == 1, g.adjacent(u, v));
    }
  }
}

TEST_P(GraphProperties, TriangleInequality) {
  oracle::Fuzz fuzz(2000 + GetParam());
  const int n = fuzz.Int(1, 64);
  const Graph g = fuzz.Connected(n, fuzz.Int(0, 15) / 100.0);
  for (Vertex u = 0; u < n; ++u) {
    EXPECT_EQ(g.distance(u, u), 0);
    for (Vertex v = 0; v < n; ++v) {
      ASSERT_EQ(g.distance(u, v), g.distance(v, u));
      for (Vertex w = 0; w < n; ++w) {
        ASSERT_LE(g.distance(u, w), g.distance(u, v) + g.distance(v, w));
      }
    }
  }
}

TEST_P(GraphProperties, MetricsMatchDefinitions) {
  oracle::Fuzz fuzz(3000 + GetParam());
  const Graph g = fuzz.Connected(fuzz.Int(1, 40), fuzz.Int(0, 20) / 100.0);
  const oracle::Raw raw = oracle::FromGraph(g);
  const GraphMetrics m = ComputeMetrics(g);
  EXPECT_EQ(m.radius, oracle::Radius(raw));
  EXPECT_EQ(m.diameter, oracle::Diameter(raw));
  EXPECT_LE(m.radius, m.diameter);
  EXPECT_LE(m.diameter, 2 * m.radius);
  std::vector<Vertex> center;
  for (Vertex v = 0; v < raw.n; ++v) {
    EXPECT_EQ(m.eccentricity[v], oracle::Eccentricity(raw, v));
    if (oracle::Eccentricity(raw, v) == m.radius) center.push_back(v);
  }
  EXPECT_EQ(m.center, center);
}

TEST_P(GraphProperties, DiametralPathIsTheTieBrokenGeodesic) {
  oracle::Fuzz fuzz(4000 + GetParam());
  const Graph g = fuzz.Connected(fuzz.Int(1, 40), fuzz.Int(0, 20) / 100.0);
  const oracle::Raw raw = oracle::FromGraph(g);
  const int d = oracle::Diameter(raw);
  const std::vector<Vertex> path = DiametralPath(g);
  ASSERT_EQ(static_cast<int>(path.size()), d + 1);
  for (int i = 0; i <= d; ++i) {
    EXPECT_EQ(raw.dist[path[0]][path[i]], i);
    if (i > 0) {
      EXPECT_TRUE(raw.adj[path[i - 1]][path[i]]);
    }
  }
  // Endpoints: the lexicographically smallest pair at distance d.
  std::pair<int, int> first{-1, -1};
  for (int u = 0; u < raw.n && first.first < 0; ++u) {
    for (int v = u; v < raw.n; ++v) {
      if (raw.dist[u][v] == d) {
        first = {u, v};
        break;
      }
    }
  }
  EXPECT_EQ(path.front(), first.first);
  EXPECT_EQ(path.back(), first.second);
  // Each step back towards v_0 takes the lowest-index candidate.
  for (int i = d; i > 0; --i) {
    int lowest = -1;
    for (int w = 0; w < raw.n && lowest < 0; ++w) {
      if (raw.adj[path[i]][w] && raw.dist[path[0]][w] == i - 1) lowest = w;
    }
    EXPECT_EQ(path[i - 1], lowest);
  }
}

TEST_P(GraphProperties, BallsAreMonotoneAndSaturate) {
  oracle::Fuzz fuzz(5000 + GetParam());
  const Graph g = fuzz.Connected(fuzz.Int(1, 30), fuzz.Int(0, 20) / 100.0);
  const GraphMetrics m = ComputeMetrics(g);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<Vertex> previous = Ball(g, v, 0);
    EXPECT_THAT(previous, ElementsAre(v));
    for (int r = 1; r <= m.eccentricity[v] + 1; ++r) {
      const std::vector<Vertex> ball = Ball(g, v, r);
      EXPECT_TRUE(std::includes(ball.begin(), ball.end(), previous.begin(),
                                previous.end()));
      previous = ball;
    }
    EXPECT_EQ(static_cast<int>(Ball(g, v, m.eccentricity[v]).size()),
              g.num_vertices());
  }
}

INSTANTIATE_TEST_SUITE_P(Fuzz, GraphProperties, ::testing::Range(0, 25));

TEST(Graph, CopiesShareTheDistanceCache) {
  const Graph g = CycleGraph(6);
  const Graph copy = g;
  EXPECT_EQ(&g.distances(), &copy.distances());
  EXPECT_EQ(copy.distance(0, 3), 3);
}

}  // namespace
}  // namespace bmp
