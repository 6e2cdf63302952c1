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

#ifndef BMP_SOLVERS_HPP_
#define BMP_SOLVERS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bmp/certificates.hpp"
#include "bmp/graph.hpp"
#include "bmp/rational.hpp"
#include "bmp/recognition.hpp"

namespace bmp {

inline constexpr int kDefaultMaxVertices = 64;

struct SolveOptions {
  // Exact solvers refuse larger graphs with kSizeLimitExceeded.
  int max_vertices = kDefaultMaxVertices;
  // gamma_b only: branch over pairwise-disjoint balls, so the witness is an
  // efficient broadcast. Exact because some optimal broadcast is efficient.
  bool efficient_only = false;
};

struct SolveReport {
  int optimum = 0;
  std::variant<Multipacking, Broadcast> witness;
  // (lower, upper) after initialisation and after every improvement.
  std::vector<std::pair<int, int>> bounds_trace;
  std::int64_t nodes = 0;
  double millis = 0;
};

struct ApproxReport {
  Multipacking multipacking;
  std::vector<Vertex> path;  // diametral path used
  int guarantee = 0;         // ceil((d + 1) / 3) <= MP
};

// MP(g) by branch and bound over vertex inclusion. Throws
// kDisconnectedGraph or kSizeLimitExceeded.
SolveReport SolveMultipackingNumber(const Graph& g,
                                    const SolveOptions& options = {});

// γ_b(g) by branch and bound over covering balls of radius <= rad(g).
// Throws kDisconnectedGraph, kTrivialGraph (n = 1) or kSizeLimitExceeded.
SolveReport SolveBroadcastNumber(const Graph& g,
                                 const SolveOptions& options = {});

// Every third vertex of the diametral path, starting at v_0.
ApproxReport ApproximateMultipacking(const Graph& g);

enum class GuaranteeKind { kChordal, kHyperbolic };

// The certified chain behind the approximation:
//   chordal:    ceil((2 MP - 1) / 3) <= ceil((2r - 1) / 3) <= ceil((d+1)/3)
//   hyperbolic: ceil((2 MP - 4δ) / 3) <= ceil((2r - 4δ) / 3) <= ceil((d+1)/3)
// MP <= r drives the first inequality; 2r <= d + 2 (chordal) or
// d >= 2r - 4δ - 1 drives the second.
struct ApproxGuarantee {
  GuaranteeKind kind = GuaranteeKind::kChordal;
  int radius = 0;
  int diameter = 0;
  HalfInteger delta;  // 0 for the chordal kind
  int approx_size = 0;        // ceil((d + 1) / 3)
  int radius_guarantee = 0;   // ceil((2r - 1) / 3) or ceil((2r - 4δ) / 3)
  bool chain_holds = false;   // radius_guarantee <= approx_size

  // The guaranteed approximation size expressed through MP.
  int ForMultipackingNumber(int mp) const;
};

// kind = kChordal throws kNotChordal unless g is chordal. For kHyperbolic a
// caller-supplied δ (an upper bound on the true value) replaces the exact
// O(n^4) computation when given.
ApproxGuarantee ComputeApproxGuarantee(
    const Graph& g, GuaranteeKind kind,
    std::optional<HalfInteger> delta = std::nullopt);

// One evaluated inequality of the bound report.
struct BoundCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool applicable = true;  // false when a hypothesis (e.g. chordality) fails
  bool holds = true;
};

struct BoundReport {
  int n = 0;
  int radius = 0;
  int diameter = 0;
  bool chordal = false;
  HalfInteger delta;
  bool delta_exact = true;  // false when supplied by the caller
  Rational mp_f;
  int approx_size = 0;

  bool exact = true;  // false in bounds-only mode
  std::optional<int> mp;
  std::optional<int> gamma_b;
  // Always filled: exact values when available, otherwise the best bounds.
  int mp_lower = 0, mp_upper = 0;
  int gamma_b_lower = 0, gamma_b_upper = 0;

  std::vector<BoundCheck> checks;

  bool all_hold() const;
};

// Computes MP, γ_b, MP_f, r, d, δ and chordality, then evaluates every
// inequality relating them. Graphs above options.max_vertices get a
// bounds-only report (LP + approximation, no exact solves).
BoundReport ComputeBoundReport(const Graph& g, const SolveOptions& options = {},
                               std::optional<HalfInteger> delta = std::nullopt);

// Integer helpers used by the bound formulas.
constexpr int CeilDiv(int a, int b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}
constexpr int FloorDiv(int a, int b) {
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

}  // namespace bmp

#endif  // BMP_SOLVERS_HPP_
