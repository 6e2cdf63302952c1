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

#ifndef BMP_LP_HPP_
#define BMP_LP_HPP_

#include <string>
#include <vector>

#include "bmp/certificates.hpp"
#include "bmp/graph.hpp"
#include "bmp/rational.hpp"

namespace bmp {

// Column (center, radius) of the covering matrix: its support is
// N_radius[center] and its cost is radius.
struct CoveringColumn {
  Vertex center;
  int radius;
  std::vector<int> rows;  // sorted support
};

// min{c.x : Ax >= 1, x >= 0} and its dual max{y.1 : yA <= c, y >= 0}, where
// rows are vertices and columns are balls.
struct CoveringSystem {
  int num_rows = 0;
  std::vector<CoveringColumn> columns;  // ordered by center, then radius

  int cost(std::size_t column) const { return columns[column].radius; }
};

enum class LpStatus { kOptimal, kInfeasible };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective;
  std::vector<Rational> primal;  // per column
  std::vector<Rational> dual;    // per row
  int pivots = 0;
};

// Columns (v, k) for 1 <= k <= max_radius, dropping any column whose ball
// already appeared for the same center at a smaller radius. A max_radius of
// 0 selects rad(g). Throws kDisconnectedGraph, kTrivialGraph (n = 1) or
// kInvalidParams (max_radius outside 1..diam).
CoveringSystem BuildCoveringSystem(const Graph& g, int max_radius = 0);

// Exact dual simplex from the all-surplus basis with smallest-index pivot
// rules. At optimality the primal and dual solutions are checked for
// feasibility and equal objectives before returning. Throws kInvalidSystem
// for malformed input.
LpSolution SolveLp(const CoveringSystem& system);

struct FractionalNumbers {
  Rational mp_f;       // max fractional multipacking
  Rational gamma_b_f;  // min fractional broadcast
  FractionalMultipacking witness;
  LpSolution solution;
  CoveringSystem system;
};

// MP_f(g) = γ_{b,f}(g) via SolveLp; the dual witness is re-checked with
// CheckFractionalMultipacking.
FractionalNumbers ComputeFractionalNumbers(const Graph& g);

// Sparse dump: comment header, "cost c_0 ... c_{N-1}", then one "row col" line
// per nonzero.
std::string FormatCoveringSystem(const CoveringSystem& system);

}  // namespace bmp

#endif  // BMP_LP_HPP_
