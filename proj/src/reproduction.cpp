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

#include "bmp/reproduction.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "bmp/certificates.hpp"
#include "bmp/families.hpp"
#include "bmp/lp.hpp"
#include "bmp/rational.hpp"
#include "bmp/recognition.hpp"
#include "bmp/solvers.hpp"

namespace bmp {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::uint64_t BatchSeed(std::uint64_t seed, std::uint64_t batch,
                        std::uint64_t i) {
  return seed * 0x9E3779B97F4A7C15ULL ^ (batch << 40) ^ i;
}

class Table {
 public:
  void Row(std::string name, std::string expected,
           const std::function<std::string()>& compute) {
    const auto start = Clock::now();
    ReproductionRow row{group_, std::move(name), std::move(expected), {},
                        false, 0};
    try {
      row.computed = compute();
      row.passed = row.computed == row.expected;
    } catch (const std::exception& e) {
      row.computed = std::string("error: ") + e.what();
    }
    row.millis = MillisSince(start);
    rows_.push_back(std::move(row));
  }

  // A row whose pass/fail is decided by `compute` rather than by string
  // equality.
  void Judged(std::string name, std::string expected,
              const std::function<std::pair<bool, std::string>()>& compute) {
    const auto start = Clock::now();
    ReproductionRow row{group_, std::move(name), std::move(expected), {},
                        false, 0};
    try {
      std::tie(row.passed, row.computed) = compute();
    } catch (const std::exception& e) {
      row.computed = std::string("error: ") + e.what();
    }
    row.millis = MillisSince(start);
    rows_.push_back(std::move(row));
  }

  void Group(std::string group) { group_ = std::move(group); }
  void SetLastMillis(double millis) { rows_.back().millis = millis; }
  std::vector<ReproductionRow> Take() { return std::move(rows_); }

 private:
  std::string group_;
  std::vector<ReproductionRow> rows_;
};

// Counts violations of one family of inequalities across a fuzz batch.
class Tally {
 public:
  explicit Tally(std::string what) : what_(std::move(what)) {}

  void Check(bool holds, const std::string& instance,
             const std::function<std::string()>& detail) {
    ++checked_;
    if (holds) return;
    if (violations_++ == 0) first_ = instance + ": " + detail();
  }

  void Fail(const std::string& instance, const std::string& why) {
    ++checked_;
    if (violations_++ == 0) first_ = instance + ": " + why;
  }

  std::string Summary(int graphs) const {
    std::string s = std::to_string(violations_) + " " + what_ + " in " +
                    std::to_string(graphs) + " graphs";
    if (violations_ > 0) s += "; first " + first_;
    return s;
  }

  std::string Expected(int graphs) const {
    return "0 " + what_ + " in " + std::to_string(graphs) + " graphs";
  }

 private:
  std::string what_;
  int checked_ = 0;
  int violations_ = 0;
  std::string first_;
};

struct Instance {
  std::string name;
  Graph graph;
};

// The exact numbers of one fuzz instance.
struct Evaluation {
  int n = 0, radius = 0, diameter = 0;
  int mp = 0, gamma_b = 0;
  int twice_delta = 0;
  bool chordal = false;
  FractionalNumbers lp;
  ApproxReport approx;
};

Evaluation Evaluate(const Graph& g) {
  Evaluation e;
  const GraphMetrics m = ComputeMetrics(g);
  e.n = g.num_vertices();
  e.radius = m.radius;
  e.diameter = m.diameter;
  e.mp = SolveMultipackingNumber(g).optimum;
  e.gamma_b = SolveBroadcastNumber(g).optimum;
  e.twice_delta = Hyperbolicity(g).twice_value();
  e.chordal = IsChordal(g).chordal;
  e.lp = ComputeFractionalNumbers(g);
  e.approx = ApproximateMultipacking(g);
  return e;
}

std::string Pair(int a, int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

void CheckApproximation(const Instance& in, const Evaluation& e, Tally& t) {
  const int size = static_cast<int>(e.approx.multipacking.members.size());
  t.Check(size == CeilDiv(e.diameter + 1, 3), in.name, [&] {
    return "size " + std::to_string(size) + ", d = " +
           std::to_string(e.diameter);
  });
  t.Check(CheckMultipacking(in.graph, e.approx.multipacking).valid, in.name,
          [] { return std::string("approximate set is not a multipacking"); });
  t.Check(size >= CeilDiv(2 * e.mp - 2 * e.twice_delta, 3), in.name, [&] {
    return "size " + std::to_string(size) + " below hyperbolic guarantee";
  });
  if (e.chordal) {
    t.Check(size >= CeilDiv(2 * e.mp - 1, 3), in.name, [&] {
      return "size " + std::to_string(size) + " below chordal guarantee";
    });
  }
}

template <typename Generate, typename Inspect>
void RunBatch(int count, Generate generate, Inspect inspect) {
  for (int i = 0; i < count; ++i) {
    Instance in = generate(i);
    inspect(in, Evaluate(in.graph));
  }
}

void GkRows(Table& t, const ReproductionOptions& options) {
  t.Group("G_k family");
  const Graph g1 = GenerateGk(1);
  t.Row("MP(G_1)", "5", [&] {
    return std::to_string(SolveMultipackingNumber(g1).optimum);
  });
  t.Row("gamma_b(G_1)", "5", [&] {
    return std::to_string(SolveBroadcastNumber(g1).optimum);
  });
  t.Row("MP_f(G_1)", "5", [&] {
    return FormatRational(ComputeFractionalNumbers(g1).mp_f);
  });
  t.Row("ball cover N_3[b_{1,7}] u N_2[b_{1,17}]", "5", [&] {
    return std::to_string(BallCoverBound(
        g1, BallCover{{{BlockVertex(1, 7), 3}, {BlockVertex(1, 17), 2}}}));
  });
  t.Row("MP_f(G_2)", "10", [&] {
    return FormatRational(ComputeFractionalNumbers(GenerateGk(2)).mp_f);
  });
  if (options.include_g2) {
    const Graph g2 = GenerateGk(2);
    int mp2 = 0, gb2 = 0;
    t.Row("MP(G_2)", "9", [&] {
      mp2 = SolveMultipackingNumber(g2).optimum;
      return std::to_string(mp2);
    });
    t.Row("gamma_b(G_2)", "10", [&] {
      gb2 = SolveBroadcastNumber(g2).optimum;
      return std::to_string(gb2);
    });
    t.Row("gamma_b(G_2) / MP(G_2)", "10/9", [&] {
      return FormatRational(Rational(gb2, mp2 == 0 ? 1 : mp2));
    });
  }
  t.Judged("block checklist", "all items pass", [&] {
    SolveOptions solve;
    const Checklist list = VerifyBlock(BlockSpec::Embedded(), solve);
    int passed = 0;
    std::string failed;
    for (const ChecklistItem& item : list.items) {
      if (item.passed) {
        ++passed;
      } else if (failed.empty()) {
        failed = "; first failure: " + item.name;
      }
    }
    return std::pair{list.all_passed(),
                     std::to_string(passed) + "/" +
                         std::to_string(list.items.size()) + " pass" + failed};
  });
  for (int k = 1; k <= 4; ++k) {
    const Graph gk = GenerateGk(k);
    t.Row("G_" + std::to_string(k) + " connected and chordal", "true", [&] {
      return std::string(gk.is_connected() && IsChordal(gk).chordal ? "true"
                                                                     : "false");
    });
  }
}

void CertificateRows(Table& t) {
  t.Group("family certificates");
  for (int k = 1; k <= 3; ++k) {
    t.Row("M_" + std::to_string(2 * k) + " on G_" + std::to_string(2 * k),
          "multipacking of size " + std::to_string(9 * k), [&] {
            const Multipacking m = FamilyMultipacking(k);
            const MultipackingCheck c =
                CheckMultipacking(GenerateGk(2 * k), m);
            return std::string(c.valid ? "multipacking" : "not a multipacking") +
                   " of size " + std::to_string(m.members.size());
          });
  }
  for (int k = 1; k <= 4; ++k) {
    const std::string gk = "G_" + std::to_string(k);
    t.Row("f on " + gk,
          "efficient dominating, cost " + std::to_string(5 * k), [&] {
            const BroadcastCheck c =
                CheckBroadcast(GenerateGk(k), FamilyBroadcast(k));
            return std::string(c.dominating ? "" : "not ") +
                   (c.efficient ? "efficient " : "inefficient ") +
                   "dominating, cost " + std::to_string(c.cost);
          });
    t.Row("w on " + gk,
          "fractional multipacking, total " + std::to_string(5 * k), [&] {
            const FractionalCheck c =
                CheckFractionalMultipacking(GenerateGk(k), FamilyWeights(k));
            return std::string(c.valid ? "" : "not a ") +
                   "fractional multipacking, total " + FormatRational(c.total);
          });
    t.Row("MP_f(" + gk + ")", std::to_string(5 * k), [&] {
      return FormatRational(ComputeFractionalNumbers(GenerateGk(k)).mp_f);
    });
  }
}

void KnownValueRows(Table& t) {
  t.Group("small graphs");
  const std::pair<const char*, Graph> graphs[] = {
      {"C_4", CycleGraph(4)},
      {"C_5", CycleGraph(5)},
      {"K_{2,3}", CompleteBipartiteGraph(2, 3)},
      {"Petersen", PetersenGraph()},
  };
  for (const auto& [name, g] : graphs) {
    t.Row(std::string("(MP, gamma_b) of ") + name, "(1, 2)", [&] {
      return Pair(SolveMultipackingNumber(g).optimum,
                  SolveBroadcastNumber(g).optimum);
    });
  }
  t.Row("MP_f(C_4)", "4/3", [] {
    return FormatRational(ComputeFractionalNumbers(CycleGraph(4)).mp_f);
  });
  t.Row("dual witness on C_4", "1/3 1/3 1/3 1/3", [] {
    const FractionalNumbers f = ComputeFractionalNumbers(CycleGraph(4));
    std::string s;
    for (const Rational& w : f.witness.weight) {
      s += (s.empty() ? "" : " ") + FormatRational(w);
    }
    return s;
  });
  t.Row("(MP, gamma_b) of P_7", "(3, 3)", [] {
    const Graph p7 = PathGraph(7);
    return Pair(SolveMultipackingNumber(p7).optimum,
                SolveBroadcastNumber(p7).optimum);
  });

  t.Group("figure reconstructions");
  for (const char* name : {"S3", "F", "H"}) {
    const auto figure = FigureReconstruction(name);
    t.Row(std::string("(MP, gamma_b) of ") + name,
          Pair(figure->expected_mp, figure->expected_gamma_b), [&] {
            if (!IsChordal(figure->graph).chordal) return std::string("not chordal");
            return Pair(SolveMultipackingNumber(figure->graph).optimum,
                        SolveBroadcastNumber(figure->graph).optimum);
          });
  }
}

void FuzzRows(Table& t, const ReproductionOptions& options) {
  t.Group("fuzz batches");
  Tally approx("approximation violations");
  int approx_graphs = 0;

  {
    Tally chain("duality chain violations");
    Tally general("gamma_b <= 2MP + 3 violations");
    const int count = options.duality_graphs;
    const auto start = Clock::now();
    RunBatch(
        count,
        [&](int i) {
          const int n = 2 + i % 9;
          const double p = 0.1 + 0.1 * ((i / 9) % 6);
          const std::uint64_t seed = BatchSeed(options.seed, 1, i);
          return Instance{"random-connected:n=" + std::to_string(n) +
                              ",p=" + std::to_string(p).substr(0, 3) +
                              ",seed=" + std::to_string(seed),
                          RandomConnectedGraph(n, p, seed)};
        },
        [&](const Instance& in, const Evaluation& e) {
          const Rational mp(e.mp), gb(e.gamma_b), r(e.radius);
          chain.Check(mp <= e.lp.mp_f && e.lp.mp_f == e.lp.gamma_b_f &&
                          e.lp.gamma_b_f <= gb && gb <= r,
                      in.name, [&] {
                        return "MP " + std::to_string(e.mp) + ", MP_f " +
                               FormatRational(e.lp.mp_f) + ", gamma_b_f " +
                               FormatRational(e.lp.gamma_b_f) + ", gamma_b " +
                               std::to_string(e.gamma_b) + ", r " +
                               std::to_string(e.radius);
                      });
          general.Check(e.gamma_b <= 2 * e.mp + 3, in.name,
                        [&] { return Pair(e.mp, e.gamma_b); });
          CheckApproximation(in, e, approx);
        });
    const double millis = MillisSince(start);
    t.Row("MP <= MP_f = gamma_b_f <= gamma_b <= r, n <= 10",
          chain.Expected(count), [&] { return chain.Summary(count); });
    t.SetLastMillis(millis);
    t.Row("gamma_b <= 2MP + 3, n <= 10", general.Expected(count),
          [&] { return general.Summary(count); });
    approx_graphs += count;
  }

  {
    Tally bound("chordal bound violations");
    std::set<std::pair<int, int>> equality;
    const int count = options.chordal_graphs;
    const auto start = Clock::now();
    RunBatch(
        count,
        [&](int i) {
          const int n = 2 + i % 11;
          const double density = 0.1 + 0.15 * ((i / 11) % 6);
          const std::uint64_t seed = BatchSeed(options.seed, 2, i);
          return Instance{"random-chordal:n=" + std::to_string(n) +
                              ",density=" + std::to_string(density).substr(0, 4) +
                              ",seed=" + std::to_string(seed),
                          RandomChordalGraph(n, density, seed)};
        },
        [&](const Instance& in, const Evaluation& e) {
          bound.Check(e.chordal, in.name,
                      [] { return std::string("generator output not chordal"); });
          bound.Check(e.gamma_b <= CeilDiv(3 * e.mp, 2) &&
                          2 * e.radius <= e.diameter + 2,
                      in.name, [&] {
                        return "(MP, gamma_b) " + Pair(e.mp, e.gamma_b) +
                               ", (r, d) " + Pair(e.radius, e.diameter);
                      });
          if (e.gamma_b == CeilDiv(3 * e.mp, 2)) {
            equality.emplace(e.mp, e.gamma_b);
          }
          CheckApproximation(in, e, approx);
        });
    const double millis = MillisSince(start);
    t.Row("gamma_b <= ceil(3MP/2) and 2r <= d + 2, chordal n <= 12",
          bound.Expected(count), [&] { return bound.Summary(count); });
    t.SetLastMillis(millis);
    t.Judged("equality gamma_b = ceil(3MP/2) at (1, 2), (2, 3), (4, 6)",
             "each pair from the fuzzer or a figure", [&] {
               std::string found = "fuzzer:";
               for (auto [a, b] : equality) found += " " + Pair(a, b);
               bool all = true;
               std::string figures;
               for (const char* name : {"S3", "F", "H"}) {
                 const auto f = FigureReconstruction(name);
                 const std::pair<int, int> want{f->expected_mp,
                                                f->expected_gamma_b};
                 if (equality.count(want)) continue;
                 const bool shown =
                     IsChordal(f->graph).chordal &&
                     SolveMultipackingNumber(f->graph).optimum == want.first &&
                     SolveBroadcastNumber(f->graph).optimum == want.second;
                 figures += std::string(" ") + name + (shown ? "" : " (failed)");
                 all = all && shown;
               }
               if (!figures.empty()) found += "; figures:" + figures;
               return std::pair{all, found};
             });
    approx_graphs += count;
  }

  {
    Tally bound("hyperbolic bound violations");
    const int count = options.hyperbolic_graphs;
    const auto start = Clock::now();
    RunBatch(
        count,
        [&](int i) {
          const int n = 2 + i % 9;
          const double p = 0.05 + 0.1 * ((i / 9) % 5);
          const std::uint64_t seed = BatchSeed(options.seed, 3, i);
          return Instance{"random-connected:n=" + std::to_string(n) +
                              ",p=" + std::to_string(p).substr(0, 4) +
                              ",seed=" + std::to_string(seed),
                          RandomConnectedGraph(n, p, seed)};
        },
        [&](const Instance& in, const Evaluation& e) {
          bound.Check(
              e.gamma_b <= FloorDiv(3 * e.mp + 2 * e.twice_delta, 2) &&
                  e.diameter >= 2 * e.radius - 2 * e.twice_delta - 1,
              in.name, [&] {
                return "(MP, gamma_b) " + Pair(e.mp, e.gamma_b) + ", (r, d) " +
                       Pair(e.radius, e.diameter) + ", delta " +
                       HalfInteger::FromTwice(e.twice_delta).ToString();
              });
          CheckApproximation(in, e, approx);
        });
    const double millis = MillisSince(start);
    t.Row("gamma_b <= floor(3MP/2 + 2delta) and d >= 2r - 4delta - 1, n <= 10",
          bound.Expected(count), [&] { return bound.Summary(count); });
    t.SetLastMillis(millis);
    approx_graphs += count;
  }

  {
    Tally oracle("oracle mismatches");
    const int count = options.oracle_graphs;
    const auto start = Clock::now();
    RunBatch(
        count,
        [&](int i) {
          const int n = 2 + i % 7;
          const double p = 0.1 + 0.15 * ((i / 7) % 5);
          const std::uint64_t seed = BatchSeed(options.seed, 4, i);
          return Instance{"random-connected:n=" + std::to_string(n) +
                              ",p=" + std::to_string(p).substr(0, 4) +
                              ",seed=" + std::to_string(seed),
                          RandomConnectedGraph(n, p, seed)};
        },
        [&](const Instance& in, const Evaluation& e) {
          const int mp = BruteForceMultipackingNumber(in.graph);
          const int gb = BruteForceBroadcastNumber(in.graph);
          oracle.Check(mp == e.mp && gb == e.gamma_b, in.name, [&] {
            return "solvers " + Pair(e.mp, e.gamma_b) + ", brute force " +
                   Pair(mp, gb);
          });
          oracle.Check(HasEfficientBroadcastOfCost(in.graph, gb), in.name,
                       [] { return std::string("no efficient optimum"); });
          CheckApproximation(in, e, approx);
        });
    const double millis = MillisSince(start);
    t.Row("exact solvers = brute force, efficient optimum exists, n <= 8",
          oracle.Expected(count), [&] { return oracle.Summary(count); });
    t.SetLastMillis(millis);
    approx_graphs += count;
  }

  {
    Tally equal("tree equality violations");
    const int count = options.tree_graphs;
    const auto start = Clock::now();
    RunBatch(
        count,
        [&](int i) {
          const int n = 2 + i % 13;
          const std::uint64_t seed = BatchSeed(options.seed, 5, i);
          return Instance{"random-tree:n=" + std::to_string(n) +
                              ",seed=" + std::to_string(seed),
                          RandomTree(n, seed)};
        },
        [&](const Instance& in, const Evaluation& e) {
          equal.Check(e.mp == e.gamma_b && e.twice_delta == 0, in.name,
                      [&] { return Pair(e.mp, e.gamma_b); });
          CheckApproximation(in, e, approx);
        });
    const double millis = MillisSince(start);
    t.Row("MP = gamma_b on trees, n <= 14", equal.Expected(count),
          [&] { return equal.Summary(count); });
    t.SetLastMillis(millis);
    approx_graphs += count;
  }

  t.Row("approximation size, validity and guarantees, all fuzz graphs",
        approx.Expected(approx_graphs),
        [&] { return approx.Summary(approx_graphs); });
}

}  // namespace

int BruteForceMultipackingNumber(const Graph& g) {
  const int n = g.num_vertices();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    Multipacking m;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1u) m.members.push_back(v);
    }
    if (CheckMultipacking(g, m).valid) best = size;
  }
  return best;
}

namespace {

// Calls visit on every broadcast with total cost exactly `budget`.
bool ForEachBroadcast(const Graph& g, int budget,
                      const std::function<bool(const Broadcast&)>& visit) {
  Broadcast f{std::vector<int>(g.num_vertices(), 0)};
  const int diameter = ComputeMetrics(g).diameter;
  std::function<bool(Vertex, int)> rec = [&](Vertex v, int left) {
    if (left == 0) return visit(f);
    if (v == g.num_vertices()) return false;
    for (int r = std::min(left, diameter); r >= 0; --r) {
      f.radius[v] = r;
      if (rec(v + 1, left - r)) return true;
    }
    f.radius[v] = 0;
    return false;
  };
  return rec(0, budget);
}

}  // namespace

int BruteForceBroadcastNumber(const Graph& g) {
  const int radius = ComputeMetrics(g).radius;
  for (int cost = 1; cost <= radius; ++cost) {
    if (ForEachBroadcast(g, cost, [&](const Broadcast& f) {
          return CheckBroadcast(g, f).dominating;
        })) {
      return cost;
    }
  }
  return radius;
}

bool HasEfficientBroadcastOfCost(const Graph& g, int cost) {
  return ForEachBroadcast(g, cost, [&](const Broadcast& f) {
    const BroadcastCheck c = CheckBroadcast(g, f);
    return c.dominating && c.efficient;
  });
}

std::vector<ReproductionRow> RunReproduction(
    const ReproductionOptions& options) {
  Table table;
  GkRows(table, options);
  CertificateRows(table);
  KnownValueRows(table);
  FuzzRows(table, options);
  return table.Take();
}

}  // namespace bmp
