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

#include <algorithm>
#include <deque>
#include <sstream>

#include "bmp/error.hpp"
#include "text_util.hpp"

namespace bmp {

Graph::Graph() : offsets_(1, 0), cache_(std::make_shared<Cache>()) {}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges,
             std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)), cache_(std::make_shared<Cache>()) {
  if (n < 0) throw Error(ErrorCode::kInvalidParams, "negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw Error(ErrorCode::kInvalidParams,
                "label count does not match vertex count");
  }
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw Error(ErrorCode::kInvalidVertex,
                  "edge {" + std::to_string(a) + "," + std::to_string(b) +
                      "} outside 0.." + std::to_string(n - 1));
    }
    if (a == b) {
      throw Error(ErrorCode::kInvalidParams,
                  "loop at vertex " + std::to_string(a));
    }
    edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end());
      dup != edges_.end()) {
    throw Error(ErrorCode::kInvalidParams,
                "repeated edge {" + std::to_string(dup->u) + "," +
                    std::to_string(dup->v) + "}");
  }

  std::vector<int> degree(n, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + offsets_[v],
              adjacency_.begin() + offsets_[v + 1]);
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  CheckVertex(v);
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  CheckVertex(v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::string Graph::label(Vertex v) const {
  CheckVertex(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

const DistanceMatrix& Graph::distances() const {
  std::call_once(cache_->once, [this] {
    DistanceMatrix dist(n_);
    std::vector<Vertex> queue(n_);
    for (Vertex s = 0; s < n_; ++s) {
      auto row = dist.mutable_row(s);
      row[s] = 0;
      std::size_t head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail) {
        const Vertex u = queue[head++];
        for (std::size_t i = offsets_[u]; i < offsets_[u + 1]; ++i) {
          const Vertex w = adjacency_[i];
          if (row[w] == kUnreachable) {
            row[w] = row[u] + 1;
            queue[tail++] = w;
          }
        }
      }
    }
    cache_->dist = std::move(dist);
  });
  return cache_->dist;
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  auto row = distances().row(0);
  return std::none_of(row.begin(), row.end(),
                      [](int d) { return d == kUnreachable; });
}

void Graph::CheckVertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorCode::kInvalidVertex,
                "vertex " + std::to_string(v) + " outside 0.." +
                    std::to_string(n_ - 1));
  }
}

void Graph::RequireConnected(std::string_view operation) const {
  if (!is_connected()) {
    throw Error(ErrorCode::kDisconnectedGraph,
                std::string(operation) + " requires a connected graph");
  }
}

std::vector<int> BfsDistances(const Graph& g, Vertex source) {
  g.CheckVertex(source);
  auto row = g.distances().row(source);
  return {row.begin(), row.end()};
}

GraphMetrics ComputeMetrics(const Graph& g) {
  g.RequireConnected("metrics");
  const int n = g.num_vertices();
  const DistanceMatrix& dist = g.distances();
  GraphMetrics m;
  m.eccentricity.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    auto row = dist.row(v);
    m.eccentricity[v] = *std::max_element(row.begin(), row.end());
  }
  m.radius = *std::min_element(m.eccentricity.begin(), m.eccentricity.end());
  m.diameter = *std::max_element(m.eccentricity.begin(), m.eccentricity.end());
  for (Vertex v = 0; v < n; ++v) {
    if (m.eccentricity[v] == m.radius) m.center.push_back(v);
  }
  return m;
}

std::vector<Vertex> Ball(const Graph& g, Vertex v, int radius) {
  g.CheckVertex(v);
  if (radius < 0) throw Error(ErrorCode::kInvalidParams, "negative radius");
  std::vector<Vertex> ball;
  auto row = g.distances().row(v);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (row[u] <= radius) ball.push_back(u);
  }
  return ball;
}

std::vector<Vertex> DiametralPath(const Graph& g) {
  g.RequireConnected("diametral_path");
  const int n = g.num_vertices();
  const DistanceMatrix& dist = g.distances();
  Vertex from = 0, to = 0;
  int best = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (dist(u, v) > best) {
        best = dist(u, v);
        from = u;
        to = v;
      }
    }
  }
  std::vector<Vertex> path(best + 1);
  path[best] = to;
  for (int level = best; level > 0; --level) {
    for (Vertex w : g.neighbors(path[level])) {
      if (dist(from, w) == level - 1) {
        path[level - 1] = w;
        break;
      }
    }
  }
  return path;
}

Graph ParseEdgeList(std::string_view text) {
  using internal::ThrowParse;
  const auto lines = internal::ContentLines(text);
  if (lines.empty()) ThrowParse(1, "missing \"n m\" header");
  const auto& header = lines.front();
  if (header.tokens.size() != 2) {
    ThrowParse(header.number, "header must be \"n m\"");
  }
  const auto n = internal::ParseInteger(header.tokens[0]);
  const auto m = internal::ParseInteger(header.tokens[1]);
  if (!n || !m || *n < 0 || *m < 0 || *n > (1 << 24)) {
    ThrowParse(header.number, "header must hold two nonnegative integers");
  }
  const std::size_t expected = static_cast<std::size_t>(*m);
  if (lines.size() - 1 < expected) {
    ThrowParse(lines.back().number,
               "expected " + std::to_string(expected) + " edge lines, found " +
                   std::to_string(lines.size() - 1));
  }
  if (lines.size() - 1 > expected) {
    ThrowParse(lines[expected + 1].number,
               "more edge lines than the header announces");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(expected);
  std::vector<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 2) ThrowParse(line.number, "edge must be \"u v\"");
    const auto u = internal::ParseInteger(line.tokens[0]);
    const auto v = internal::ParseInteger(line.tokens[1]);
    if (!u || !v) ThrowParse(line.number, "edge endpoints must be integers");
    if (*u < 0 || *v >= *n || *u >= *v) {
      ThrowParse(line.number, "edge requires 0 <= u < v < n");
    }
    edges.emplace_back(static_cast<Vertex>(*u), static_cast<Vertex>(*v));
    seen.push_back({static_cast<Vertex>(*u), static_cast<Vertex>(*v)});
  }
  std::vector<int> order(seen.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return seen[a] < seen[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (seen[order[i]] == seen[order[i - 1]]) {
      ThrowParse(lines[order[i] + 1].number, "repeated edge");
    }
  }
  return Graph(static_cast<int>(*n), edges);
}

std::string FormatEdgeList(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string FormatLabelMap(const Graph& g) {
  if (!g.has_labels()) return {};
  std::ostringstream out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << v << ' ' << g.label(v) << '\n';
  }
  return out.str();
}

}  // namespace bmp
