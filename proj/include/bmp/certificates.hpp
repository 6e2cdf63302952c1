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

#ifndef BMP_CERTIFICATES_HPP_
#define BMP_CERTIFICATES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmp/graph.hpp"
#include "bmp/rational.hpp"

namespace bmp {

// A vertex set M; a multipacking when |N_r[v] ∩ M| <= r for all v, r >= 1.
struct Multipacking {
  std::vector<Vertex> members;  // sorted, distinct
};

// Per-vertex broadcast radius f(v) >= 0. Towers are vertices with f(v) > 0.
struct Broadcast {
  std::vector<int> radius;

  int cost() const;
  std::vector<Vertex> towers() const;
};

// Per-vertex nonnegative rational weight.
struct FractionalMultipacking {
  std::vector<Rational> weight;

  Rational total() const;
};

// Balls N_r[c] given as (center, radius) pairs.
struct BallCover {
  std::vector<std::pair<Vertex, int>> balls;

  int total_radius() const;
};

struct MultipackingViolation {
  Vertex center;
  int radius;
  std::vector<Vertex> members_in_ball;
};

struct MultipackingCheck {
  bool valid = true;
  std::optional<MultipackingViolation> violation;  // lexicographically first
};

struct BroadcastCheck {
  bool dominating = false;
  bool efficient = false;  // no vertex hears two towers
  int cost = 0;
  std::vector<Vertex> uncovered;
  // Vertices hearing two or more towers.
  std::vector<Vertex> overheard;
};

struct FractionalViolation {
  Vertex center;
  int radius;
  Rational ball_weight;
};

struct FractionalCheck {
  bool valid = true;
  Rational total;
  std::optional<FractionalViolation> violation;
};

// Radii 1..ecc(v) are checked for every v; larger radii repeat the
// saturated ball with a looser bound. Throws kInvalidVertex,
// kInvalidParams (repeated member) or kDisconnectedGraph.
MultipackingCheck CheckMultipacking(const Graph& g, const Multipacking& m);

// Throws kInvalidParams when f does not have one entry per vertex,
// kRadiusOutOfRange when some f(v) is negative or exceeds diam(g).
BroadcastCheck CheckBroadcast(const Graph& g, const Broadcast& b);

// Exact rational check. Throws kNegativeWeight, kInvalidParams, or
// kDisconnectedGraph.
FractionalCheck CheckFractionalMultipacking(const Graph& g,
                                            const FractionalMultipacking& w);

// Sum of the radii of a cover of V by balls of radius >= 1: any multipacking
// meets N_r[c] in at most r vertices, so this bounds MP(g) from above.
// Throws kIncompleteCover listing uncovered vertices.
int BallCoverBound(const Graph& g, const BallCover& cover);

// Greedy cover: repeatedly take the (v, r), 1 <= r <= rad(g), covering the
// most new vertices per unit of radius (ties: lower v, then lower r).
BallCover GreedyBallCover(const Graph& g);

// Certificate text formats.
//   multipacking: space-separated vertex ids (any number of lines)
//   broadcast:    lines "v r"; unlisted vertices broadcast 0
//   fractional:   lines "v p/q"; unlisted vertices weigh 0
// Throw kParseError with line numbers, kInvalidVertex for ids >= n.
Multipacking ParseMultipacking(std::string_view text, int n);
Broadcast ParseBroadcast(std::string_view text, int n);
FractionalMultipacking ParseFractionalMultipacking(std::string_view text,
                                                   int n);
std::string FormatMultipacking(const Multipacking& m);
std::string FormatBroadcast(const Broadcast& b);
std::string FormatFractionalMultipacking(const FractionalMultipacking& w);

}  // namespace bmp

#endif  // BMP_CERTIFICATES_HPP_
