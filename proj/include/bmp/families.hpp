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

#ifndef BMP_FAMILIES_HPP_
#define BMP_FAMILIES_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmp/certificates.hpp"
#include "bmp/graph.hpp"
#include "bmp/solvers.hpp"

namespace bmp {

inline constexpr int kBlockSize = 21;

// Vertex b_{block,j} (both 1-based) of a chain of blocks.
constexpr Vertex BlockVertex(int block, int j) {
  return kBlockSize * (block - 1) + (j - 1);
}

// The 21-vertex chordal block. Edges use the 1-based labels b_1..b_21. In a
// chain, b_{i,21} is joined to b_{i+1,1}.
struct BlockSpec {
  std::vector<std::pair<int, int>> edges;

  // Three copies of a triangulated 6-vertex strip, each followed by a
  // separator (b_7, b_14, b_21) hanging off the strip's last vertex.
  static BlockSpec Embedded();
};

// k copies of the block chained by the join rule, labelled "b_{i,j}".
Graph ChainBlocks(const BlockSpec& block, int k);
Graph GenerateGk(int k);

struct FamilyCertificates {
  int k = 0;
  Multipacking multipacking;       // on G_{2k}, size 9k
  Broadcast broadcast;             // on G_k, cost 5k, efficient
  FractionalMultipacking weights;  // on G_k, total 5k
};

// Index-formula expansions, unchecked.
//   M_{2k}: b_{2i-1,{1,7,13,18,21}} and b_{2i,{4,8,14,18}}
//   f:      2 on b_{i,6}, b_{i,17}; 1 on b_{i,12}
//   w:      1/3 on b_{i,{1,6,7,8,13,14,15,20,21}}, 2/3 on b_{i,{4,11,18}}
Multipacking FamilyMultipacking(int k);
Broadcast FamilyBroadcast(int k);
FractionalMultipacking FamilyWeights(int k);

// Expands and verifies all three on ChainBlocks(block, ...). Throws
// kCertificateInvalid naming the failing certificate, kInvalidParams for
// k < 1.
FamilyCertificates BuildFamilyCertificates(
    int k, const BlockSpec& block = BlockSpec::Embedded());

struct ChecklistItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Checklist {
  std::vector<ChecklistItem> items;
  bool all_passed() const;
};

// Every property of the block that the G_k argument relies on: structure,
// exact MP/γ_b/MP_f of G_1 and G_2, the certificates and the distance facts
// used in the MP(G_2) = 9 argument. Failures are itemised, never thrown.
Checklist VerifyBlock(const BlockSpec& block = BlockSpec::Embedded(),
                      const SolveOptions& options = {});

Graph PathGraph(int n);
Graph CycleGraph(int n);
Graph CompleteGraph(int n);
Graph CompleteBipartiteGraph(int a, int b);
Graph StarGraph(int leaves);  // K_{1,leaves}
Graph PetersenGraph();
// k-sun: a k-clique c_0..c_{k-1} plus s_i adjacent to c_i and c_{i+1}.
Graph SunGraph(int k);

// Named standard graphs: "path" n, "cycle" n, "complete" n,
// "complete-bipartite" a b, "star" leaves, "petersen", "sun" k.
// Throws kInvalidParams.
Graph GenerateStandard(std::string_view name, std::span<const int> params);

// Adds vertices one at a time, each joined to a random clique grown from a
// random anchor (every further eligible vertex kept with probability
// `density`), then relabels at random. Always chordal and connected;
// density 1 gives K_n.
Graph RandomChordalGraph(int n, double density, std::uint64_t seed);

// A random recursive spanning tree plus every other pair with probability p.
Graph RandomConnectedGraph(int n, double p, std::uint64_t seed);
Graph RandomTree(int n, std::uint64_t seed);

struct FigureGraph {
  std::string name;
  Graph graph;
  int expected_mp = 0;
  int expected_gamma_b = 0;
  std::string note;
};

// Reconstructions of the small chordal graphs attaining
// γ_b = ceil(3/2 MP): "S3" (1,2), "F" (2,3), "H" (4,6). nullopt for an
// unknown name.
std::optional<FigureGraph> FigureReconstruction(std::string_view name);

// Inline generator specs, e.g. "gk:2", "path:7", "complete-bipartite:2,3",
// "random-chordal:n=20,seed=7,density=0.3", "random-connected:n=9,p=0.2",
// "random-tree:n=12,seed=3", "figure:H". Throws kInvalidParams.
Graph GraphFromSpec(std::string_view spec);

}  // namespace bmp

#endif  // BMP_FAMILIES_HPP_
