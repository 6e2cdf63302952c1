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

#ifndef BMP_REPRODUCTION_HPP_
#define BMP_REPRODUCTION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "bmp/graph.hpp"

namespace bmp {

struct ReproductionRow {
  std::string group;
  std::string name;
  std::string expected;
  std::string computed;
  bool passed = false;
  double millis = 0;
};

struct ReproductionOptions {
  std::uint64_t seed = 1;
  // Fuzz batch sizes; the defaults are the full suite.
  int duality_graphs = 500;    // connected, n <= 10
  int chordal_graphs = 300;    // chordal, n <= 12
  int hyperbolic_graphs = 300; // connected, n <= 10, exact δ
  int oracle_graphs = 200;     // connected, n <= 8, brute force
  int tree_graphs = 200;       // trees, n <= 14
  bool include_g2 = true;      // exact MP and γ_b on the 42-vertex G_2
};

// The expected-vs-computed table: the G_k block and chain, the family
// certificates, small known values, the figure graphs and fuzz batches for
// every inequality. Never throws for a failing row.
std::vector<ReproductionRow> RunReproduction(
    const ReproductionOptions& options = {});

// Brute-force references, exponential; for n <= 10 or so.
int BruteForceMultipackingNumber(const Graph& g);
int BruteForceBroadcastNumber(const Graph& g);
// Whether some dominating broadcast of cost `cost` is efficient.
bool HasEfficientBroadcastOfCost(const Graph& g, int cost);

}  // namespace bmp

#endif  // BMP_REPRODUCTION_HPP_
