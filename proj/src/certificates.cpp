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

#include "bmp/certificates.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bmp/error.hpp"
#include "text_util.hpp"

namespace bmp {
namespace {

int MaxFinite(std::span<const int> row) {
  int best = 0;
  for (int d : row) {
    if (d != kUnreachable) best = std::max(best, d);
  }
  return best;
}

}  // namespace

int Broadcast::cost() const {
  return std::accumulate(radius.begin(), radius.end(), 0);
}

std::vector<Vertex> Broadcast::towers() const {
  std::vector<Vertex> t;
  for (Vertex v = 0; v < static_cast<Vertex>(radius.size()); ++v) {
    if (radius[v] > 0) t.push_back(v);
  }
  return t;
}

Rational FractionalMultipacking::total() const {
  Rational sum = 0;
  for (const Rational& w : weight) sum += w;
  return sum;
}

int BallCover::total_radius() const {
  int sum = 0;
  for (const auto& [center, r] : balls) sum += r;
  return sum;
}

MultipackingCheck CheckMultipacking(const Graph& g, const Multipacking& m) {
  g.RequireConnected("check_multipacking");
  const int n = g.num_vertices();
  std::vector<char> in(n, 0);
  for (Vertex v : m.members) {
    g.CheckVertex(v);
    if (in[v]) {
      throw Error(ErrorCode::kInvalidParams,
                  "vertex " + std::to_string(v) + " listed twice");
    }
    in[v] = 1;
  }
  const DistanceMatrix& dist = g.distances();
  std::vector<int> at_distance;
  for (Vertex v = 0; v < n; ++v) {
    auto row = dist.row(v);
    const int ecc = MaxFinite(row);
    at_distance.assign(ecc + 1, 0);
    for (Vertex u : m.members) ++at_distance[row[u]];
    int count = at_distance[0];
    for (int r = 1; r <= ecc; ++r) {
      count += at_distance[r];
      if (count > r) {
        MultipackingViolation violation{v, r, {}};
        for (Vertex u : m.members) {
          if (row[u] <= r) violation.members_in_ball.push_back(u);
        }
        std::sort(violation.members_in_ball.begin(),
                  violation.members_in_ball.end());
        return {false, std::move(violation)};
      }
    }
  }
  return {};
}

BroadcastCheck CheckBroadcast(const Graph& g, const Broadcast& b) {
  g.RequireConnected("check_broadcast");
  const int n = g.num_vertices();
  if (static_cast<int>(b.radius.size()) != n) {
    throw Error(ErrorCode::kInvalidParams,
                "broadcast has " + std::to_string(b.radius.size()) +
                    " entries for " + std::to_string(n) + " vertices");
  }
  const DistanceMatrix& dist = g.distances();
  int diameter = 0;
  for (Vertex v = 0; v < n; ++v) diameter = std::max(diameter, MaxFinite(dist.row(v)));
  for (Vertex v = 0; v < n; ++v) {
    if (b.radius[v] < 0 || b.radius[v] > diameter) {
      throw Error(ErrorCode::kRadiusOutOfRange,
                  "f(" + std::to_string(v) + ") = " +
                      std::to_string(b.radius[v]) + " outside 0..diam = 0.." +
                      std::to_string(diameter));
    }
  }
  BroadcastCheck check;
  check.cost = b.cost();
  const std::vector<Vertex> towers = b.towers();
  for (Vertex v = 0; v < n; ++v) {
    int heard = 0;
    for (Vertex t : towers) {
      if (dist(t, v) <= b.radius[t]) ++heard;
    }
    if (heard == 0) check.uncovered.push_back(v);
    if (heard >= 2) check.overheard.push_back(v);
  }
  check.dominating = check.uncovered.empty();
  check.efficient = check.overheard.empty();
  return check;
}

FractionalCheck CheckFractionalMultipacking(const Graph& g,
                                            const FractionalMultipacking& w) {
  g.RequireConnected("check_fractional_multipacking");
  const int n = g.num_vertices();
  if (static_cast<int>(w.weight.size()) != n) {
    throw Error(ErrorCode::kInvalidParams,
                "weighting has " + std::to_string(w.weight.size()) +
                    " entries for " + std::to_string(n) + " vertices");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (w.weight[v] < 0) {
      throw Error(ErrorCode::kNegativeWeight,
                  "w(" + std::to_string(v) + ") = " +
                      FormatRational(w.weight[v]) + " < 0");
    }
  }
  FractionalCheck check;
  check.total = w.total();
  const DistanceMatrix& dist = g.distances();
  std::vector<Rational> at_distance;
  for (Vertex v = 0; v < n; ++v) {
    auto row = dist.row(v);
    const int ecc = MaxFinite(row);
    at_distance.assign(ecc + 1, Rational(0));
    for (Vertex u = 0; u < n; ++u) {
      if (w.weight[u] != 0) at_distance[row[u]] += w.weight[u];
    }
    Rational sum = at_distance[0];
    for (int r = 1; r <= ecc; ++r) {
      sum += at_distance[r];
      if (sum > r) {
        check.valid = false;
        check.violation = FractionalViolation{v, r, sum};
        return check;
      }
    }
  }
  return check;
}

int BallCoverBound(const Graph& g, const BallCover& cover) {
  const int n = g.num_vertices();
  std::vector<char> covered(n, 0);
  for (const auto& [center, r] : cover.balls) {
    g.CheckVertex(center);
    if (r < 1) {
      throw Error(ErrorCode::kInvalidParams,
                  "ball-cover radii must be >= 1, got " + std::to_string(r));
    }
    auto row = g.distances().row(center);
    for (Vertex u = 0; u < n; ++u) {
      if (row[u] <= r) covered[u] = 1;
    }
  }
  std::string missing;
  for (Vertex u = 0; u < n; ++u) {
    if (!covered[u]) missing += (missing.empty() ? "" : " ") + std::to_string(u);
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kIncompleteCover, "uncovered vertices: " + missing);
  }
  return cover.total_radius();
}

BallCover GreedyBallCover(const Graph& g) {
  const GraphMetrics metrics = ComputeMetrics(g);
  const int n = g.num_vertices();
  const DistanceMatrix& dist = g.distances();
  std::vector<char> covered(n, 0);
  int remaining = n;
  BallCover cover;
  const int max_radius = std::max(1, metrics.radius);
  while (remaining > 0) {
    Vertex best_v = -1;
    int best_r = 0, best_gain = 0;
    for (Vertex v = 0; v < n; ++v) {
      auto row = dist.row(v);
      std::vector<int> new_at(max_radius + 1, 0);
      for (Vertex u = 0; u < n; ++u) {
        if (!covered[u] && row[u] <= max_radius) ++new_at[row[u]];
      }
      int gain = new_at[0];
      for (int r = 1; r <= max_radius; ++r) {
        gain += new_at[r];
        // gain / r > best_gain / best_r
        if (best_v < 0 || gain * best_r > best_gain * r) {
          best_v = v;
          best_r = r;
          best_gain = gain;
        }
      }
    }
    cover.balls.emplace_back(best_v, best_r);
    auto row = dist.row(best_v);
    for (Vertex u = 0; u < n; ++u) {
      if (!covered[u] && row[u] <= best_r) {
        covered[u] = 1;
        --remaining;
      }
    }
  }
  return cover;
}

Multipacking ParseMultipacking(std::string_view text, int n) {
  Multipacking m;
  for (const auto& line : internal::ContentLines(text)) {
    for (auto token : line.tokens) {
      const auto v = internal::ParseInteger(token);
      if (!v) internal::ThrowParse(line.number, "vertex ids must be integers");
      if (*v < 0 || *v >= n) {
        throw Error(ErrorCode::kInvalidVertex,
                    "line " + std::to_string(line.number) + ": vertex " +
                        std::string(token) + " outside 0.." +
                        std::to_string(n - 1));
      }
      m.members.push_back(static_cast<Vertex>(*v));
    }
  }
  std::sort(m.members.begin(), m.members.end());
  if (std::adjacent_find(m.members.begin(), m.members.end()) !=
      m.members.end()) {
    throw Error(ErrorCode::kParseError, "multipacking lists a vertex twice");
  }
  return m;
}

namespace {

template <typename Value, typename ParseValue>
std::vector<Value> ParseVertexValueLines(std::string_view text, int n,
                                         Value zero, ParseValue parse_value) {
  std::vector<Value> values(n, zero);
  std::vector<char> seen(n, 0);
  for (const auto& line : internal::ContentLines(text)) {
    if (line.tokens.size() != 2) {
      internal::ThrowParse(line.number, "expected \"vertex value\"");
    }
    const auto v = internal::ParseInteger(line.tokens[0]);
    if (!v) internal::ThrowParse(line.number, "vertex id must be an integer");
    if (*v < 0 || *v >= n) {
      throw Error(ErrorCode::kInvalidVertex,
                  "line " + std::to_string(line.number) + ": vertex " +
                      std::to_string(*v) + " outside 0.." +
                      std::to_string(n - 1));
    }
    if (seen[*v]) internal::ThrowParse(line.number, "vertex listed twice");
    seen[*v] = 1;
    values[*v] = parse_value(line.tokens[1], line.number);
  }
  return values;
}

}  // namespace

Broadcast ParseBroadcast(std::string_view text, int n) {
  return {ParseVertexValueLines<int>(
      text, n, 0, [](std::string_view token, int line) {
        const auto r = internal::ParseInteger(token);
        if (!r || *r < std::numeric_limits<int>::min() ||
            *r > std::numeric_limits<int>::max()) {
          internal::ThrowParse(line, "radius must be an integer");
        }
        return static_cast<int>(*r);
      })};
}

FractionalMultipacking ParseFractionalMultipacking(std::string_view text,
                                                   int n) {
  return {ParseVertexValueLines<Rational>(
      text, n, Rational(0), [](std::string_view token, int line) {
        try {
          return ParseRational(token);
        } catch (const Error& e) {
          internal::ThrowParse(line, e.what());
        }
      })};
}

std::string FormatMultipacking(const Multipacking& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.members.size(); ++i) {
    out << (i ? " " : "") << m.members[i];
  }
  out << '\n';
  return out.str();
}

std::string FormatBroadcast(const Broadcast& b) {
  std::ostringstream out;
  for (Vertex v = 0; v < static_cast<Vertex>(b.radius.size()); ++v) {
    if (b.radius[v] > 0) out << v << ' ' << b.radius[v] << '\n';
  }
  return out.str();
}

std::string FormatFractionalMultipacking(const FractionalMultipacking& w) {
  std::ostringstream out;
  for (Vertex v = 0; v < static_cast<Vertex>(w.weight.size()); ++v) {
    if (w.weight[v] != 0) out << v << ' ' << FormatRational(w.weight[v]) << '\n';
  }
  return out.str();
}

}  // namespace bmp
