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

#ifndef BMP_RECOGNITION_HPP_
#define BMP_RECOGNITION_HPP_

#include <compare>
#include <string>
#include <vector>

#include "bmp/graph.hpp"

namespace bmp {

// A nonnegative multiple of 1/2, stored as twice its value. Used for the
// hyperbolicity constant so every bound built from it stays integral.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger FromTwice(int twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInteger FromInteger(int value) {
    return FromTwice(2 * value);
  }
  // "0", "1/2", "3", "1.5" ... Throws kParseError, or kInvalidParams for
  // values that are negative or not multiples of 1/2.
  static HalfInteger Parse(const std::string& text);

  constexpr int twice_value() const { return twice_; }
  std::string ToString() const;  // "3/2", "1", "0"

  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

 private:
  int twice_ = 0;
};

struct ChordalityWitness {
  bool chordal = false;
  // chordal: a perfect elimination ordering (each vertex's later neighbors
  // form a clique). Otherwise empty.
  std::vector<Vertex> elimination_order;
  // not chordal: an induced cycle of length >= 4, smallest vertex first and
  // its smaller cycle neighbor second. Otherwise empty.
  std::vector<Vertex> chordless_cycle;
};

// Maximum cardinality search followed by a perfect-elimination check. Works on
// disconnected graphs.
ChordalityWitness IsChordal(const Graph& g);

// Checks the witness against g without rerunning recognition.
bool VerifyChordalityWitness(const Graph& g, const ChordalityWitness& w);

// Exact Gromov hyperbolicity by the four-point condition over all vertex
// quadruples. Graphs with fewer than 4 vertices are 0-hyperbolic.
HalfInteger Hyperbolicity(const Graph& g);

}  // namespace bmp

#endif  // BMP_RECOGNITION_HPP_
