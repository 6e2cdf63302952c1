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

#ifndef BMP_GRAPH_HPP_
#define BMP_GRAPH_HPP_

#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bmp {

// Vertices are dense integers 0..n-1.
using Vertex = int;

// Distance to a vertex in another component.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

struct Edge {
  Vertex u;  // u < v
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Row-major n x n matrix of hop counts.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n)
      : n_(n), dist_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int size() const { return n_; }
  int operator()(Vertex u, Vertex v) const {
    return dist_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const int> row(Vertex u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * n_,
            static_cast<std::size_t>(n_)};
  }
  std::span<int> mutable_row(Vertex u) {
    return {dist_.data() + static_cast<std::size_t>(u) * n_,
            static_cast<std::size_t>(n_)};
  }

 private:
  int n_ = 0;
  std::vector<int> dist_;
};

struct GraphMetrics {
  std::vector<int> eccentricity;
  int radius = 0;
  int diameter = 0;
  std::vector<Vertex> center;  // sorted
};

// Immutable simple undirected graph. All-pairs distances are computed on
// first use and shared between copies; the cache is populated under a
// std::call_once so a Graph may be read from several threads.
class Graph {
 public:
  // The empty graph (n = 0).
  Graph();

  // Throws kInvalidVertex for endpoints outside 0..n-1 and kInvalidParams
  // for loops or repeated edges. Endpoint order in `edges` is irrelevant.
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges,
        std::vector<std::string> labels = {});

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // Canonical (u < v), lexicographically sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  bool has_labels() const { return !labels_.empty(); }
  // Falls back to the decimal index when the graph carries no labels.
  std::string label(Vertex v) const;

  const DistanceMatrix& distances() const;
  int distance(Vertex u, Vertex v) const { return distances()(u, v); }
  bool is_connected() const;

  // Throws kInvalidVertex unless 0 <= v < n.
  void CheckVertex(Vertex v) const;
  // Throws kDisconnectedGraph naming `operation` unless connected and n >= 1.
  void RequireConnected(std::string_view operation) const;

 private:
  struct Cache {
    std::once_flag once;
    DistanceMatrix dist;
  };

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;  // CSR adjacency
  std::vector<Vertex> adjacency_;
  std::vector<std::string> labels_;
  std::shared_ptr<Cache> cache_;
};

// Single-source BFS hop counts; kUnreachable for other components.
std::vector<int> BfsDistances(const Graph& g, Vertex source);

// Eccentricities, radius, diameter and center. Requires a connected graph.
GraphMetrics ComputeMetrics(const Graph& g);

// N_r[v] as a sorted vertex list.
std::vector<Vertex> Ball(const Graph& g, Vertex v, int radius);

// A shortest path v_0..v_d with d = diam(g). The endpoints are the
// lexicographically smallest pair at distance d; the path is rebuilt from
// v_d towards v_0 taking the lowest-index neighbor one level closer.
std::vector<Vertex> DiametralPath(const Graph& g);

// Edge-list text format: "n m" header, then m lines "u v" with
// 0 <= u < v < n. '#' comment lines and blank lines may appear anywhere.
// Failures throw kParseError with a 1-based line number in the message.
Graph ParseEdgeList(std::string_view text);
std::string FormatEdgeList(const Graph& g);

// "vertex label" lines, one per vertex. Empty when g has no labels.
std::string FormatLabelMap(const Graph& g);

}  // namespace bmp

#endif  // BMP_GRAPH_HPP_
