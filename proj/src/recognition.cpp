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

#include <algorithm>
#include <array>
#include <optional>

#include "bmp/error.hpp"
#include "bmp/rational.hpp"

namespace bmp {
namespace {

// Shortest u-p path avoiding N[v] except u and p, or nullopt.
std::optional<std::vector<Vertex>> PathAroundNeighborhood(const Graph& g,
                                                          Vertex v, Vertex u,
                                                          Vertex p) {
  const int n = g.num_vertices();
  std::vector<char> blocked(n, 0);
  blocked[v] = 1;
  for (Vertex w : g.neighbors(v)) blocked[w] = 1;
  blocked[u] = blocked[p] = 0;
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> queue{u};
  parent[u] = u;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    if (x == p) break;
    for (Vertex y : g.neighbors(x)) {
      if (blocked[y] || parent[y] != -1) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (parent[p] == -1) return std::nullopt;
  std::vector<Vertex> path;
  for (Vertex x = p; x != u; x = parent[x]) path.push_back(x);
  path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Vertex> NormalizeCycle(std::vector<Vertex> cycle) {
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
  return cycle;
}

// v with non-adjacent neighbors u, p: closing a shortest detour gives an
// induced cycle v, u, ..., p of length >= 4.
std::optional<std::vector<Vertex>> CycleThrough(const Graph& g, Vertex v,
                                                Vertex u, Vertex p) {
  auto path = PathAroundNeighborhood(g, v, u, p);
  if (!path) return std::nullopt;
  std::vector<Vertex> cycle{v};
  cycle.insert(cycle.end(), path->begin(), path->end());
  return NormalizeCycle(std::move(cycle));
}

std::vector<Vertex> FindChordlessCycle(const Graph& g, Vertex v, Vertex u,
                                       Vertex p) {
  if (auto cycle = CycleThrough(g, v, u, p)) return *cycle;
  // Fall back to every (v, u, p) configuration; some chordless cycle exists
  // because the elimination check failed.
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    auto nb = g.neighbors(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        if (auto cycle = CycleThrough(g, x, nb[i], nb[j])) return *cycle;
      }
    }
  }
  throw Error(ErrorCode::kInternal, "no chordless cycle in a non-chordal graph");
}

}  // namespace

HalfInteger HalfInteger::Parse(const std::string& text) {
  Rational value;
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    // Decimal forms: only ".0" and ".5" fractions are meaningful.
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac != "0" && frac != "5") {
      throw Error(ErrorCode::kInvalidParams,
                  "delta must be a multiple of 1/2: " + text);
    }
    value = ParseRational(whole.empty() ? "0" : whole);
    if (frac == "5") value += Rational(1, 2);
  } else {
    value = ParseRational(text);
  }
  const Rational twice = value * 2;
  if (twice < 0 || twice.get_den() != 1 || !twice.get_num().fits_sint_p()) {
    throw Error(ErrorCode::kInvalidParams,
                "delta must be a nonnegative multiple of 1/2: " + text);
  }
  return FromTwice(static_cast<int>(twice.get_num().get_si()));
}

std::string HalfInteger::ToString() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

ChordalityWitness IsChordal(const Graph& g) {
  const int n = g.num_vertices();
  // Maximum cardinality search: repeatedly visit the unvisited vertex with the
  // most visited neighbors (lowest index on ties).
  std::vector<int> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> visit_order;
  std::vector<int> position(n, 0);
  visit_order.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!visited[v] && (best < 0 || weight[v] > weight[best])) best = v;
    }
    visited[best] = 1;
    position[best] = step;
    visit_order.push_back(best);
    for (Vertex w : g.neighbors(best)) {
      if (!visited[w]) ++weight[w];
    }
  }

  // The reverse visit order is a PEO iff g is chordal. It suffices to check
  // that each vertex's earlier-visited neighbors other than the latest one
  // are adjacent to that latest one.
  for (Vertex v : visit_order) {
    Vertex latest = -1;
    for (Vertex w : g.neighbors(v)) {
      if (position[w] < position[v] &&
          (latest < 0 || position[w] > position[latest])) {
        latest = w;
      }
    }
    if (latest < 0) continue;
    for (Vertex w : g.neighbors(v)) {
      if (w != latest && position[w] < position[v] && !g.adjacent(w, latest)) {
        ChordalityWitness witness;
        witness.chordless_cycle = FindChordlessCycle(g, v, w, latest);
        return witness;
      }
    }
  }
  ChordalityWitness witness;
  witness.chordal = true;
  witness.elimination_order.assign(visit_order.rbegin(), visit_order.rend());
  return witness;
}

bool VerifyChordalityWitness(const Graph& g, const ChordalityWitness& w) {
  const int n = g.num_vertices();
  if (w.chordal) {
    const auto& order = w.elimination_order;
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) {
      if (order[i] < 0 || order[i] >= n || position[order[i]] != -1) {
        return false;
      }
      position[order[i]] = i;
    }
    for (Vertex v = 0; v < n; ++v) {
      std::vector<Vertex> later;
      for (Vertex x : g.neighbors(v)) {
        if (position[x] > position[v]) later.push_back(x);
      }
      for (std::size_t i = 0; i < later.size(); ++i) {
        for (std::size_t j = i + 1; j < later.size(); ++j) {
          if (!g.adjacent(later[i], later[j])) return false;
        }
      }
    }
    return true;
  }
  const auto& cycle = w.chordless_cycle;
  const std::size_t len = cycle.size();
  if (len < 4) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : cycle) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

HalfInteger Hyperbolicity(const Graph& g) {
  g.RequireConnected("hyperbolicity");
  const int n = g.num_vertices();
  if (n < 4) return HalfInteger{};
  const DistanceMatrix& d = g.distances();
  int best = 0;  // twice delta
  // The quadruple value (largest sum - middle sum) never exceeds twice the
  // smallest of the six distances, which lets whole branches be skipped.
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int uv = d(u, v);
      if (2 * uv <= best) continue;
      for (Vertex w = v + 1; w < n; ++w) {
        const int uw = d(u, w), vw = d(v, w);
        if (2 * std::min(uw, vw) <= best) continue;
        for (Vertex x = w + 1; x < n; ++x) {
          std::array<int, 3> s{uv + d(w, x), uw + d(v, x), d(u, x) + vw};
          std::sort(s.begin(), s.end());
          best = std::max(best, s[2] - s[1]);
        }
      }
    }
  }
  return HalfInteger::FromTwice(best);
}

}  // namespace bmp
