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

#include "bmp/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "bmp/error.hpp"
#include "bmp/lp.hpp"
#include "bmp/recognition.hpp"
#include "text_util.hpp"

namespace bmp {
namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

[[noreturn]] void InvalidParams(const std::string& what) {
  throw Error(ErrorCode::kInvalidParams, what);
}

// Platform-independent draws from a raw mt19937_64 stream; the standard
// distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Below(std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform in [0, 1).
  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool Chance(double p) { return p >= 1.0 || Unit() < p; }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

Graph Relabel(int n, const EdgeList& edges, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.Shuffle(perm);
  EdgeList mapped;
  mapped.reserve(edges.size());
  for (auto [u, v] : edges) mapped.emplace_back(perm[u], perm[v]);
  return Graph(n, mapped);
}

std::string BlockLabel(int block, int j) {
  return "b_{" + std::to_string(block) + "," + std::to_string(j) + "}";
}

}  // namespace

BlockSpec BlockSpec::Embedded() {
  // One strip on positions 1..6 plus its separator at position 7.
  static constexpr std::pair<int, int> kUnit[] = {
      {1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5},
      {3, 5}, {3, 6}, {4, 5}, {5, 6}, {6, 7},
  };
  BlockSpec spec;
  for (int t = 0; t < 3; ++t) {
    for (auto [a, b] : kUnit) spec.edges.emplace_back(7 * t + a, 7 * t + b);
    if (t > 0) spec.edges.emplace_back(7 * t, 7 * t + 1);
  }
  return spec;
}

Graph ChainBlocks(const BlockSpec& block, int k) {
  if (k < 1) InvalidParams("chain needs k >= 1 blocks");
  EdgeList edges;
  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i) {
    for (auto [a, b] : block.edges) {
      if (a < 1 || a > kBlockSize || b < 1 || b > kBlockSize) {
        InvalidParams("block edge outside b_1..b_21");
      }
      edges.emplace_back(BlockVertex(i, a), BlockVertex(i, b));
    }
    if (i < k) edges.emplace_back(BlockVertex(i, 21), BlockVertex(i + 1, 1));
    for (int j = 1; j <= kBlockSize; ++j) labels.push_back(BlockLabel(i, j));
  }
  return Graph(kBlockSize * k, edges, std::move(labels));
}

Graph GenerateGk(int k) { return ChainBlocks(BlockSpec::Embedded(), k); }

Multipacking FamilyMultipacking(int k) {
  if (k < 1) InvalidParams("k must be >= 1");
  Multipacking m;
  for (int i = 1; i <= k; ++i) {
    for (int j : {1, 7, 13, 18, 21}) m.members.push_back(BlockVertex(2 * i - 1, j));
    for (int j : {4, 8, 14, 18}) m.members.push_back(BlockVertex(2 * i, j));
  }
  return m;
}

Broadcast FamilyBroadcast(int k) {
  if (k < 1) InvalidParams("k must be >= 1");
  Broadcast f{std::vector<int>(kBlockSize * k, 0)};
  for (int i = 1; i <= k; ++i) {
    f.radius[BlockVertex(i, 6)] = 2;
    f.radius[BlockVertex(i, 17)] = 2;
    f.radius[BlockVertex(i, 12)] = 1;
  }
  return f;
}

FractionalMultipacking FamilyWeights(int k) {
  if (k < 1) InvalidParams("k must be >= 1");
  FractionalMultipacking w{std::vector<Rational>(kBlockSize * k, Rational(0))};
  for (int i = 1; i <= k; ++i) {
    for (int j : {1, 6, 7, 8, 13, 14, 15, 20, 21}) {
      w.weight[BlockVertex(i, j)] = Rational(1, 3);
    }
    for (int j : {4, 11, 18}) w.weight[BlockVertex(i, j)] = Rational(2, 3);
  }
  return w;
}

FamilyCertificates BuildFamilyCertificates(int k, const BlockSpec& block) {
  FamilyCertificates certs{k, FamilyMultipacking(k), FamilyBroadcast(k),
                           FamilyWeights(k)};
  auto invalid = [&](const std::string& what) {
    throw Error(ErrorCode::kCertificateInvalid,
                what + " fails for k = " + std::to_string(k) +
                    "; the block does not support it");
  };
  const Graph g2k = ChainBlocks(block, 2 * k);
  if (!CheckMultipacking(g2k, certs.multipacking).valid) {
    invalid("multipacking M_2k on G_2k");
  }
  const Graph gk = ChainBlocks(block, k);
  const BroadcastCheck b = CheckBroadcast(gk, certs.broadcast);
  if (!b.dominating || !b.efficient || b.cost != 5 * k) {
    invalid("efficient dominating broadcast f on G_k");
  }
  const FractionalCheck w = CheckFractionalMultipacking(gk, certs.weights);
  if (!w.valid || w.total != 5 * k) invalid("fractional multipacking w on G_k");
  return certs;
}

bool Checklist::all_passed() const {
  return std::all_of(items.begin(), items.end(),
                     [](const ChecklistItem& i) { return i.passed; });
}

Checklist VerifyBlock(const BlockSpec& block, const SolveOptions& options) {
  Checklist list;
  auto item = [&](std::string name, auto&& body) {
    ChecklistItem it{std::move(name), false, {}};
    try {
      std::tie(it.passed, it.detail) = body();
    } catch (const std::exception& e) {
      it.detail = e.what();
    }
    list.items.push_back(std::move(it));
  };
  auto equals = [](auto computed, auto expected) {
    std::ostringstream s;
    s << "computed " << computed << ", expected " << expected;
    return std::pair<bool, std::string>{computed == expected, s.str()};
  };

  const Graph g1 = ChainBlocks(block, 1);
  const Graph g2 = ChainBlocks(block, 2);
  auto b = [](int i, int j) { return BlockVertex(i, j); };

  item("G_1 is connected", [&] {
    return std::pair{g1.is_connected(), std::string{}};
  });
  item("G_1 is chordal", [&] {
    return std::pair{IsChordal(g1).chordal, std::string{}};
  });
  item("MP(G_1) = 5", [&] {
    return equals(SolveMultipackingNumber(g1, options).optimum, 5);
  });
  item("gamma_b(G_1) = 5", [&] {
    return equals(SolveBroadcastNumber(g1, options).optimum, 5);
  });
  item("MP_f(G_1) = 5", [&] {
    return equals(FormatRational(ComputeFractionalNumbers(g1).mp_f),
                  std::string("5"));
  });
  item("V(G_1) = N_3[b_7] u N_2[b_17], bound 5", [&] {
    return equals(BallCoverBound(g1, BallCover{{{b(1, 7), 3}, {b(1, 17), 2}}}),
                  5);
  });
  item("M_1 = {b_1, b_7, b_13, b_18, b_21} is a multipacking", [&] {
    Multipacking m{{b(1, 1), b(1, 7), b(1, 13), b(1, 18), b(1, 21)}};
    return std::pair{CheckMultipacking(g1, m).valid, std::string{}};
  });
  for (int k : {1, 2}) {
    const std::string gk = "G_" + std::to_string(k);
    item("f is an efficient dominating broadcast of cost " +
             std::to_string(5 * k) + " on " + gk,
         [&] {
           const BroadcastCheck c =
               CheckBroadcast(k == 1 ? g1 : g2, FamilyBroadcast(k));
           return std::pair{c.dominating && c.efficient && c.cost == 5 * k,
                            "cost " + std::to_string(c.cost)};
         });
    item("w is a fractional multipacking of total " + std::to_string(5 * k) +
             " on " + gk,
         [&] {
           const FractionalCheck c =
               CheckFractionalMultipacking(k == 1 ? g1 : g2, FamilyWeights(k));
           return std::pair{c.valid && c.total == 5 * k,
                            "total " + FormatRational(c.total)};
         });
  }
  item("M_2 is a multipacking of size 9 on G_2", [&] {
    const Multipacking m = FamilyMultipacking(1);
    return std::pair{CheckMultipacking(g2, m).valid && m.members.size() == 9,
                     std::string{}};
  });
  item("S_1, S_2, S_3 each have diameter <= 2", [&] {
    for (int base : {0, 7, 14}) {
      for (int x = 1; x <= 6; ++x) {
        for (int y = x + 1; y <= 6; ++y) {
          if (g1.distance(b(1, base + x), b(1, base + y)) > 2) {
            return std::pair{false, "d(b_" + std::to_string(base + x) +
                                        ", b_" + std::to_string(base + y) +
                                        ") > 2"};
          }
        }
      }
    }
    return std::pair{true, std::string{}};
  });
  auto ball_contains = [&](const Graph& g, Vertex center,
                           std::vector<Vertex> targets) {
    for (Vertex t : targets) {
      if (g.distance(center, t) > 2) {
        return std::pair{false, "misses " + g.label(t)};
      }
    }
    return std::pair{true, std::string{}};
  };
  item("N_2[b_{1,10}] contains b_{1,7}, b_{1,14} and S_2", [&] {
    return ball_contains(g2, b(1, 10),
                         {b(1, 7), b(1, 14), b(1, 8), b(1, 9), b(1, 10),
                          b(1, 11), b(1, 12), b(1, 13)});
  });
  item("N_2[b_{2,3}] contains b_{1,21}, b_{2,7} and S_4", [&] {
    return ball_contains(g2, b(2, 3),
                         {b(1, 21), b(2, 7), b(2, 1), b(2, 2), b(2, 3),
                          b(2, 4), b(2, 5), b(2, 6)});
  });
  item("N_2[b_{2,17}] contains b_{2,14}, b_{2,21} and S_6", [&] {
    return ball_contains(g2, b(2, 17),
                         {b(2, 14), b(2, 21), b(2, 15), b(2, 16), b(2, 17),
                          b(2, 18), b(2, 19), b(2, 20)});
  });
  item("MP(G_2) = 9", [&] {
    return equals(SolveMultipackingNumber(g2, options).optimum, 9);
  });
  item("gamma_b(G_2) = 10", [&] {
    return equals(SolveBroadcastNumber(g2, options).optimum, 10);
  });
  return list;
}

Graph PathGraph(int n) {
  if (n < 1) InvalidParams("path needs n >= 1");
  EdgeList edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph CycleGraph(int n) {
  if (n < 3) InvalidParams("cycle needs n >= 3");
  EdgeList edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph CompleteGraph(int n) {
  if (n < 1) InvalidParams("complete graph needs n >= 1");
  EdgeList edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph CompleteBipartiteGraph(int a, int b) {
  if (a < 1 || b < 1) InvalidParams("complete bipartite needs a, b >= 1");
  EdgeList edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph(a + b, edges);
}

Graph StarGraph(int leaves) {
  if (leaves < 1) InvalidParams("star needs at least one leaf");
  return CompleteBipartiteGraph(1, leaves);
}

Graph PetersenGraph() {
  EdgeList edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, edges);
}

Graph SunGraph(int k) {
  if (k < 3) InvalidParams("sun needs k >= 3");
  EdgeList edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    edges.emplace_back(k + i, i);
    edges.emplace_back(k + i, (i + 1) % k);
  }
  return Graph(2 * k, edges);
}

Graph GenerateStandard(std::string_view name, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      InvalidParams(std::string(name) + " takes " + std::to_string(count) +
                    " parameter(s)");
    }
  };
  if (name == "path") return need(1), PathGraph(params[0]);
  if (name == "cycle") return need(1), CycleGraph(params[0]);
  if (name == "complete") return need(1), CompleteGraph(params[0]);
  if (name == "complete-bipartite" || name == "kbip") {
    return need(2), CompleteBipartiteGraph(params[0], params[1]);
  }
  if (name == "star") return need(1), StarGraph(params[0]);
  if (name == "petersen") return need(0), PetersenGraph();
  if (name == "sun") return need(1), SunGraph(params[0]);
  InvalidParams("unknown standard graph \"" + std::string(name) + "\"");
}

Graph RandomChordalGraph(int n, double density, std::uint64_t seed) {
  if (n < 1) InvalidParams("random chordal graph needs n >= 1");
  if (!(density >= 0.0 && density <= 1.0)) {
    InvalidParams("density must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  EdgeList edges;
  for (Vertex v = 1; v < n; ++v) {
    const Vertex anchor = static_cast<Vertex>(rng.Below(v));
    std::vector<Vertex> clique{anchor};
    std::vector<Vertex> pool;
    for (Vertex u = 0; u < v; ++u) {
      if (adj[anchor][u]) pool.push_back(u);
    }
    rng.Shuffle(pool);
    for (Vertex u : pool) {
      const bool joins = std::all_of(clique.begin(), clique.end(),
                                     [&](Vertex c) { return adj[c][u]; });
      if (joins && rng.Chance(density)) clique.push_back(u);
    }
    for (Vertex u : clique) {
      adj[u][v] = adj[v][u] = 1;
      edges.emplace_back(u, v);
    }
  }
  return Relabel(n, edges, rng);
}

Graph RandomConnectedGraph(int n, double p, std::uint64_t seed) {
  if (n < 1) InvalidParams("random connected graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) InvalidParams("p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  EdgeList edges;
  for (Vertex v = 1; v < n; ++v) {
    const Vertex parent = static_cast<Vertex>(rng.Below(v));
    adj[parent][v] = adj[v][parent] = 1;
    edges.emplace_back(parent, v);
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!adj[u][v] && p > 0.0 && rng.Chance(p)) edges.emplace_back(u, v);
    }
  }
  return Relabel(n, edges, rng);
}

Graph RandomTree(int n, std::uint64_t seed) {
  return RandomConnectedGraph(n, 0.0, seed);
}

namespace {

// Appends a 3-sun on base..base+5 in SunGraph(3) layout and returns the
// outer vertex joined to c_2 and c_0.
Vertex AppendSun(EdgeList& edges, Vertex base) {
  const Graph sun = SunGraph(3);
  for (const Edge& e : sun.edges()) {
    edges.emplace_back(base + e.u, base + e.v);
  }
  return base + 5;
}

Vertex AppendPath(EdgeList& edges, Vertex from, Vertex first, int length) {
  for (int s = 0; s < length; ++s) {
    edges.emplace_back(from, first + s);
    from = first + s;
  }
  return from;
}

}  // namespace

std::optional<FigureGraph> FigureReconstruction(std::string_view name) {
  if (name == "S3") {
    return FigureGraph{"S3", SunGraph(3), 1, 2,
                       "the 3-sun: a split graph of diameter 2"};
  }
  if (name == "F") {
    EdgeList edges;
    AppendPath(edges, AppendSun(edges, 0), 6, 3);
    return FigureGraph{"F", Graph(9, edges), 2, 3,
                       "3-sun with a pendant path of length 3 at an outer "
                       "vertex; r = 3, d = 5"};
  }
  if (name == "H") {
    EdgeList edges;
    const Vertex last = AppendPath(edges, AppendSun(edges, 0), 6, 6);
    edges.emplace_back(7, 12);
    edges.emplace_back(10, 13);
    edges.emplace_back(last, AppendSun(edges, 14));
    return FigureGraph{"H", Graph(20, edges), 4, 6,
                       "two 3-suns joined outer-to-outer by a path of length "
                       "7, with a pendant vertex on its 2nd and 5th inner "
                       "vertex; r = 6, d = 11"};
  }
  return std::nullopt;
}

namespace {

struct SpecArgs {
  std::vector<int> positional;
  std::map<std::string, std::string, std::less<>> named;
};

SpecArgs ParseSpecArgs(std::string_view text) {
  SpecArgs args;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view part = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{}
                                           : text.substr(comma + 1);
    const std::size_t eq = part.find('=');
    if (eq == std::string_view::npos) {
      const auto v = internal::ParseInteger(part);
      if (!v || *v < std::numeric_limits<int>::min() ||
          *v > std::numeric_limits<int>::max()) {
        InvalidParams("bad generator parameter \"" + std::string(part) + "\"");
      }
      args.positional.push_back(static_cast<int>(*v));
    } else {
      args.named[std::string(part.substr(0, eq))] =
          std::string(part.substr(eq + 1));
    }
  }
  return args;
}

std::int64_t NamedInt(const SpecArgs& args, std::string_view key,
                      std::optional<std::int64_t> fallback) {
  auto it = args.named.find(key);
  if (it == args.named.end()) {
    if (!fallback) InvalidParams("missing parameter " + std::string(key));
    return *fallback;
  }
  const auto v = internal::ParseInteger(it->second);
  if (!v) InvalidParams("parameter " + std::string(key) + " must be an integer");
  return *v;
}

double NamedReal(const SpecArgs& args, std::string_view key, double fallback) {
  auto it = args.named.find(key);
  if (it == args.named.end()) return fallback;
  try {
    std::size_t used = 0;
    const double value = std::stod(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing");
    return value;
  } catch (const std::exception&) {
    InvalidParams("parameter " + std::string(key) + " must be a number");
  }
}

void AllowOnly(const SpecArgs& args, std::initializer_list<std::string_view> keys) {
  for (const auto& [key, value] : args.named) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      InvalidParams("unknown generator parameter \"" + key + "\"");
    }
  }
  if (!args.positional.empty()) {
    InvalidParams("random generators take key=value parameters");
  }
}

}  // namespace

Graph GraphFromSpec(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view rest =
      colon == std::string_view::npos ? std::string_view{}
                                      : spec.substr(colon + 1);
  if (name == "figure") {
    auto figure = FigureReconstruction(rest);
    if (!figure) InvalidParams("unknown figure \"" + std::string(rest) + "\"");
    return figure->graph;
  }
  const SpecArgs args = ParseSpecArgs(rest);
  if (name == "gk") {
    if (args.positional.size() != 1 || !args.named.empty()) {
      InvalidParams("gk takes one parameter k");
    }
    return GenerateGk(args.positional[0]);
  }
  if (name == "random-chordal") {
    AllowOnly(args, {"n", "density", "seed"});
    return RandomChordalGraph(static_cast<int>(NamedInt(args, "n", {})),
                              NamedReal(args, "density", 0.5),
                              static_cast<std::uint64_t>(NamedInt(args, "seed", 0)));
  }
  if (name == "random-connected") {
    AllowOnly(args, {"n", "p", "seed"});
    return RandomConnectedGraph(static_cast<int>(NamedInt(args, "n", {})),
                                NamedReal(args, "p", 0.3),
                                static_cast<std::uint64_t>(NamedInt(args, "seed", 0)));
  }
  if (name == "random-tree") {
    AllowOnly(args, {"n", "seed"});
    return RandomTree(static_cast<int>(NamedInt(args, "n", {})),
                      static_cast<std::uint64_t>(NamedInt(args, "seed", 0)));
  }
  if (!args.named.empty()) {
    InvalidParams(std::string(name) + " takes positional parameters");
  }
  return GenerateStandard(name, args.positional);
}

}  // namespace bmp
