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

#include "bmp/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "bmp/error.hpp"
#include "bmp/lp.hpp"

namespace bmp {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void CheckSize(const Graph& g, const SolveOptions& options,
               std::string_view what) {
  if (g.num_vertices() > options.max_vertices) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                std::string(what) + " on " + std::to_string(g.num_vertices()) +
                    " vertices exceeds the limit of " +
                    std::to_string(options.max_vertices));
  }
}

// Tracks r - |N_r[u] ∩ M| for every u and 1 <= r <= ecc(u), together with
// suffix minima, so "can M take c?" costs O(n) and add/remove cost O(n ecc).
class PackingSlack {
 public:
  explicit PackingSlack(const Graph& g)
      : n_(g.num_vertices()), dist_(g.distances()) {
    offset_.resize(n_ + 1, 0);
    ecc_.resize(n_);
    for (Vertex u = 0; u < n_; ++u) {
      auto row = dist_.row(u);
      ecc_[u] = *std::max_element(row.begin(), row.end());
      offset_[u + 1] = offset_[u] + ecc_[u] + 1;
    }
    slack_.resize(offset_[n_]);
    suffix_min_.resize(offset_[n_]);
    for (Vertex u = 0; u < n_; ++u) {
      for (int r = 0; r <= ecc_[u]; ++r) slack_[offset_[u] + r] = r;
      // r = 0 is unconstrained; its slot mirrors r = 1.
      slack_[offset_[u]] = std::numeric_limits<int>::max() / 2;
      Refresh(u);
    }
  }

  bool CanAdd(Vertex c) const {
    for (Vertex u = 0; u < n_; ++u) {
      if (suffix_min_[offset_[u] + dist_(u, c)] < 1) return false;
    }
    return true;
  }

  void Add(Vertex c) { Shift(c, -1); }
  void Remove(Vertex c) { Shift(c, +1); }

 private:
  void Shift(Vertex c, int delta) {
    for (Vertex u = 0; u < n_; ++u) {
      for (int r = std::max(1, dist_(u, c)); r <= ecc_[u]; ++r) {
        slack_[offset_[u] + r] += delta;
      }
      Refresh(u);
    }
  }

  void Refresh(Vertex u) {
    const int base = offset_[u];
    int running = std::numeric_limits<int>::max();
    for (int r = ecc_[u]; r >= 0; --r) {
      running = std::min(running, slack_[base + r]);
      suffix_min_[base + r] = running;
    }
  }

  int n_;
  const DistanceMatrix& dist_;
  std::vector<int> ecc_;
  std::vector<int> offset_;
  std::vector<int> slack_;
  std::vector<int> suffix_min_;
};

class MultipackingSearch {
 public:
  MultipackingSearch(const Graph& g, const BallCover& cover, int lower,
                     std::vector<Vertex> incumbent, int upper)
      : g_(g),
        dist_(g.distances()),
        slack_(g),
        cover_(cover),
        best_(lower),
        best_set_(std::move(incumbent)),
        upper_(upper) {
    const int n = g.num_vertices();
    balls_of_.resize(n);
    for (std::size_t i = 0; i < cover_.balls.size(); ++i) {
      const auto [center, r] = cover_.balls[i];
      for (Vertex u = 0; u < n; ++u) {
        if (dist_(center, u) <= r) balls_of_[u].push_back(static_cast<int>(i));
      }
    }
    in_ball_.assign(cover_.balls.size(), 0);
  }

  void Run(std::vector<std::pair<int, int>>& trace) {
    trace_ = &trace;
    const int n = g_.num_vertices();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return g_.degree(a) < g_.degree(b);
    });
    Search(order);
  }

  int best() const { return best_; }
  const std::vector<Vertex>& best_set() const { return best_set_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  // Any final M meets each cover ball in at most its radius.
  int CoverBound(const std::vector<int>& cand_in_ball) const {
    int bound = 0;
    for (std::size_t i = 0; i < cover_.balls.size(); ++i) {
      bound += std::min(cover_.balls[i].second, in_ball_[i] + cand_in_ball[i]);
    }
    return bound;
  }

  void Search(const std::vector<Vertex>& cand) {
    ++nodes_;
    const int size = static_cast<int>(current_.size());
    if (size > best_) {
      best_ = size;
      best_set_ = current_;
      trace_->emplace_back(best_, upper_);
    }
    if (best_ >= upper_) return;

    std::vector<int> cand_in_ball(cover_.balls.size(), 0);
    for (Vertex c : cand) {
      for (int i : balls_of_[c]) ++cand_in_ball[i];
    }
    for (std::size_t idx = 0; idx < cand.size(); ++idx) {
      const int suffix = static_cast<int>(cand.size() - idx);
      if (size + suffix <= best_ || CoverBound(cand_in_ball) <= best_) return;
      const Vertex v = cand[idx];
      for (int i : balls_of_[v]) --cand_in_ball[i];

      current_.push_back(v);
      slack_.Add(v);
      for (int i : balls_of_[v]) ++in_ball_[i];
      std::vector<Vertex> next;
      next.reserve(cand.size() - idx - 1);
      for (std::size_t j = idx + 1; j < cand.size(); ++j) {
        const Vertex c = cand[j];
        // Two members are never within distance 2 of each other.
        if (dist_(v, c) >= 3 && slack_.CanAdd(c)) next.push_back(c);
      }
      Search(next);
      for (int i : balls_of_[v]) --in_ball_[i];
      slack_.Remove(v);
      current_.pop_back();
      if (best_ >= upper_) return;
    }
  }

  const Graph& g_;
  const DistanceMatrix& dist_;
  PackingSlack slack_;
  const BallCover& cover_;
  std::vector<std::vector<int>> balls_of_;
  std::vector<int> in_ball_;
  std::vector<Vertex> current_;
  int best_;
  std::vector<Vertex> best_set_;
  int upper_;
  std::int64_t nodes_ = 0;
  std::vector<std::pair<int, int>>* trace_ = nullptr;
};

class BroadcastSearch {
 public:
  BroadcastSearch(const Graph& g, const CoveringSystem& system)
      : system_(system), n_(g.num_vertices()), slack_(g) {
    covering_.resize(n_);
    for (std::size_t j = 0; j < system_.columns.size(); ++j) {
      for (int r : system_.columns[j].rows) {
        covering_[r].push_back(static_cast<int>(j));
      }
    }
    for (auto& list : covering_) {
      std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
        return system_.cost(a) < system_.cost(b);
      });
    }
    cover_count_.assign(n_, 0);
    tower_.assign(n_, 0);
  }

  void SetIncumbent(int cost, std::vector<int> columns) {
    best_ = cost;
    best_columns_ = std::move(columns);
  }

  // Returns false when the node budget ran out before completion.
  bool Run(int lower, bool efficient_only, std::int64_t node_budget,
           std::vector<std::pair<int, int>>* trace) {
    lower_ = lower;
    efficient_only_ = efficient_only;
    node_budget_ = node_budget;
    trace_ = trace;
    exhausted_ = false;
    if (best_ > lower_) Search();
    return !exhausted_;
  }

  int best() const { return best_; }
  const std::vector<int>& best_columns() const { return best_columns_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  // Cost still needed: a greedy multipacking of uncovered vertices, since a
  // ball of radius k holds at most k of its members.
  int RemainingBound() {
    std::vector<Vertex> picked;
    for (Vertex u = 0; u < n_; ++u) {
      if (cover_count_[u] == 0 && slack_.CanAdd(u)) {
        slack_.Add(u);
        picked.push_back(u);
      }
    }
    for (Vertex u : picked) slack_.Remove(u);
    return static_cast<int>(picked.size());
  }

  void Apply(int j, int delta) {
    for (int r : system_.columns[j].rows) cover_count_[r] += delta;
    tower_[system_.columns[j].center] += delta;
    cost_ += delta * system_.cost(j);
  }

  void Search() {
    if (exhausted_ || best_ <= lower_) return;
    if (node_budget_ > 0 && nodes_ >= node_budget_) {
      exhausted_ = true;
      return;
    }
    ++nodes_;
    Vertex u = 0;
    while (u < n_ && cover_count_[u] > 0) ++u;
    if (u == n_) {
      if (cost_ < best_) {
        best_ = cost_;
        best_columns_ = chosen_;
        if (trace_) trace_->emplace_back(lower_, best_);
      }
      return;
    }
    if (cost_ + RemainingBound() >= best_) return;
    for (int j : covering_[u]) {
      const CoveringColumn& column = system_.columns[j];
      if (cost_ + column.radius >= best_) break;
      if (tower_[column.center]) continue;
      if (efficient_only_ &&
          std::any_of(column.rows.begin(), column.rows.end(),
                      [&](int r) { return cover_count_[r] > 0; })) {
        continue;
      }
      Apply(j, +1);
      chosen_.push_back(j);
      Search();
      chosen_.pop_back();
      Apply(j, -1);
      if (exhausted_ || best_ <= lower_) return;
    }
  }

  const CoveringSystem& system_;
  int n_;
  PackingSlack slack_;
  std::vector<std::vector<int>> covering_;  // per vertex, by cost then center
  std::vector<int> cover_count_;
  std::vector<int> tower_;
  std::vector<int> chosen_;
  int cost_ = 0;
  int best_ = std::numeric_limits<int>::max();
  std::vector<int> best_columns_;
  int lower_ = 0;
  bool efficient_only_ = false;
  std::int64_t node_budget_ = 0;
  std::int64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::pair<int, int>>* trace_ = nullptr;
};

}  // namespace

SolveReport SolveMultipackingNumber(const Graph& g,
                                    const SolveOptions& options) {
  const auto start = Clock::now();
  g.RequireConnected("mp_exact");
  CheckSize(g, options, "mp_exact");
  SolveReport report;
  if (g.num_vertices() == 1) {
    report.optimum = 1;
    report.witness = Multipacking{{0}};
    report.bounds_trace.emplace_back(1, 1);
    report.millis = MillisSince(start);
    return report;
  }

  const GraphMetrics metrics = ComputeMetrics(g);
  const ApproxReport approx = ApproximateMultipacking(g);
  const BallCover cover = GreedyBallCover(g);
  const FractionalNumbers fractional = ComputeFractionalNumbers(g);
  const int upper =
      std::min({cover.total_radius(),
                static_cast<int>(Floor(fractional.mp_f).get_si()),
                metrics.radius});
  const int lower = static_cast<int>(approx.multipacking.members.size());
  report.bounds_trace.emplace_back(lower, upper);

  MultipackingSearch search(g, cover, lower, approx.multipacking.members,
                            upper);
  if (lower < upper) search.Run(report.bounds_trace);
  report.optimum = search.best();
  Multipacking witness{search.best_set()};
  std::sort(witness.members.begin(), witness.members.end());
  report.nodes = search.nodes();
  report.bounds_trace.emplace_back(report.optimum, report.optimum);

  const MultipackingCheck check = CheckMultipacking(g, witness);
  if (!check.valid ||
      static_cast<int>(witness.members.size()) != report.optimum) {
    throw Error(ErrorCode::kInternal, "mp_exact witness failed verification");
  }
  report.witness = std::move(witness);
  report.millis = MillisSince(start);
  return report;
}

SolveReport SolveBroadcastNumber(const Graph& g, const SolveOptions& options) {
  const auto start = Clock::now();
  g.RequireConnected("gamma_b_exact");
  if (g.num_vertices() == 1) {
    throw Error(ErrorCode::kTrivialGraph,
                "gamma_b is undefined on K_1: no vertex can be a tower");
  }
  CheckSize(g, options, "gamma_b_exact");

  const GraphMetrics metrics = ComputeMetrics(g);
  const FractionalNumbers fractional = ComputeFractionalNumbers(g);
  const CoveringSystem& system = fractional.system;
  const int lower = static_cast<int>(Ceil(fractional.mp_f).get_si());

  // Incumbent: a center broadcasting at the radius dominates everything.
  int center_column = -1;
  for (std::size_t j = 0; j < system.columns.size(); ++j) {
    if (system.columns[j].center == metrics.center.front() &&
        static_cast<int>(system.columns[j].rows.size()) == g.num_vertices()) {
      center_column = static_cast<int>(j);
      break;
    }
  }
  SolveReport report;
  report.bounds_trace.emplace_back(lower, metrics.radius);

  BroadcastSearch search(g, system);
  search.SetIncumbent(metrics.radius, {center_column});
  std::int64_t nodes = 0;
  if (options.efficient_only) {
    search.Run(lower, /*efficient_only=*/true, 0, &report.bounds_trace);
    nodes = search.nodes();
  } else {
    // A short efficient-only pass usually reaches the LP bound at once; the
    // unrestricted search then only has to close any remaining gap.
    constexpr std::int64_t kSeedBudget = 20000;
    BroadcastSearch seed(g, system);
    seed.SetIncumbent(metrics.radius, {center_column});
    seed.Run(lower, /*efficient_only=*/true, kSeedBudget, &report.bounds_trace);
    nodes += seed.nodes();
    search.SetIncumbent(seed.best(), seed.best_columns());
    search.Run(lower, /*efficient_only=*/false, 0, &report.bounds_trace);
    nodes += search.nodes();
  }

  Broadcast witness{std::vector<int>(g.num_vertices(), 0)};
  for (int j : search.best_columns()) {
    witness.radius[system.columns[j].center] = system.columns[j].radius;
  }
  report.optimum = search.best();
  report.nodes = nodes;
  report.bounds_trace.emplace_back(report.optimum, report.optimum);

  const BroadcastCheck check = CheckBroadcast(g, witness);
  if (!check.dominating || check.cost != report.optimum ||
      (options.efficient_only && !check.efficient)) {
    throw Error(ErrorCode::kInternal,
                "gamma_b_exact witness failed verification");
  }
  report.witness = std::move(witness);
  report.millis = MillisSince(start);
  return report;
}

ApproxReport ApproximateMultipacking(const Graph& g) {
  ApproxReport report;
  report.path = DiametralPath(g);
  for (std::size_t i = 0; i < report.path.size(); i += 3) {
    report.multipacking.members.push_back(report.path[i]);
  }
  std::sort(report.multipacking.members.begin(),
            report.multipacking.members.end());
  const int d = static_cast<int>(report.path.size()) - 1;
  report.guarantee = CeilDiv(d + 1, 3);
  if (!CheckMultipacking(g, report.multipacking).valid ||
      static_cast<int>(report.multipacking.members.size()) !=
          report.guarantee) {
    throw Error(ErrorCode::kInternal,
                "diametral-path multipacking failed verification");
  }
  return report;
}

int ApproxGuarantee::ForMultipackingNumber(int mp) const {
  return kind == GuaranteeKind::kChordal
             ? CeilDiv(2 * mp - 1, 3)
             : CeilDiv(2 * mp - 2 * delta.twice_value(), 3);
}

ApproxGuarantee ComputeApproxGuarantee(const Graph& g, GuaranteeKind kind,
                                       std::optional<HalfInteger> delta) {
  const GraphMetrics metrics = ComputeMetrics(g);
  ApproxGuarantee out;
  out.kind = kind;
  out.radius = metrics.radius;
  out.diameter = metrics.diameter;
  out.approx_size = CeilDiv(metrics.diameter + 1, 3);
  if (kind == GuaranteeKind::kChordal) {
    if (!IsChordal(g).chordal) {
      throw Error(ErrorCode::kNotChordal,
                  "chordal guarantee requested for a non-chordal graph");
    }
    out.radius_guarantee = CeilDiv(2 * metrics.radius - 1, 3);
  } else {
    out.delta = delta ? *delta : Hyperbolicity(g);
    out.radius_guarantee =
        CeilDiv(2 * metrics.radius - 2 * out.delta.twice_value(), 3);
  }
  out.chain_holds = out.radius_guarantee <= out.approx_size;
  return out;
}

bool BoundReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) {
    return !c.applicable || c.holds;
  });
}

BoundReport ComputeBoundReport(const Graph& g, const SolveOptions& options,
                               std::optional<HalfInteger> delta) {
  g.RequireConnected("bound_report");
  if (g.num_vertices() == 1) {
    throw Error(ErrorCode::kTrivialGraph,
                "bound report needs gamma_b, undefined on K_1");
  }
  BoundReport report;
  const GraphMetrics metrics = ComputeMetrics(g);
  report.n = g.num_vertices();
  report.radius = metrics.radius;
  report.diameter = metrics.diameter;
  report.chordal = IsChordal(g).chordal;
  report.delta_exact = !delta.has_value();
  report.delta = delta ? *delta : Hyperbolicity(g);
  const FractionalNumbers fractional = ComputeFractionalNumbers(g);
  report.mp_f = fractional.mp_f;
  report.approx_size =
      static_cast<int>(ApproximateMultipacking(g).multipacking.members.size());

  report.exact = g.num_vertices() <= options.max_vertices;
  if (report.exact) {
    report.mp = SolveMultipackingNumber(g, options).optimum;
    report.gamma_b = SolveBroadcastNumber(g, options).optimum;
    report.mp_lower = report.mp_upper = *report.mp;
    report.gamma_b_lower = report.gamma_b_upper = *report.gamma_b;
  } else {
    report.mp_lower = report.approx_size;
    report.mp_upper = std::min(
        {static_cast<int>(Floor(report.mp_f).get_si()),
         GreedyBallCover(g).total_radius(), metrics.radius});
    report.gamma_b_lower = static_cast<int>(Ceil(report.mp_f).get_si());
    report.gamma_b_upper = metrics.radius;
  }

  const int r = report.radius;
  const int d = report.diameter;
  const int twice_delta = report.delta.twice_value();
  auto add = [&](std::string name, std::string lhs, std::string rhs,
                 bool applicable, bool holds) {
    report.checks.push_back(
        {std::move(name), std::move(lhs), std::move(rhs), applicable, holds});
  };
  const Rational gamma_b_f = fractional.gamma_b_f;
  add("MP_f = gamma_b_f", FormatRational(report.mp_f),
      FormatRational(gamma_b_f), true, report.mp_f == gamma_b_f);
  add("2r <= d + 2 (chordal)", std::to_string(2 * r), std::to_string(d + 2),
      report.chordal, 2 * r <= d + 2);
  add("d >= 2r - 4delta - 1", std::to_string(d),
      std::to_string(2 * r - 2 * twice_delta - 1), true,
      d >= 2 * r - 2 * twice_delta - 1);
  add("|approx| = ceil((d+1)/3)", std::to_string(report.approx_size),
      std::to_string(CeilDiv(d + 1, 3)), true,
      report.approx_size == CeilDiv(d + 1, 3));

  const bool exact = report.exact;
  const int mp = report.mp.value_or(0);
  const int gb = report.gamma_b.value_or(0);
  const std::string na = "n/a";
  auto exact_text = [&](int v) { return exact ? std::to_string(v) : na; };
  add("MP <= MP_f", exact_text(mp), FormatRational(report.mp_f), exact,
      Rational(mp) <= report.mp_f);
  add("gamma_b_f <= gamma_b", FormatRational(gamma_b_f), exact_text(gb), exact,
      gamma_b_f <= gb);
  add("gamma_b <= rad", exact_text(gb), std::to_string(r), exact, gb <= r);
  add("ceil((d+1)/3) <= MP", std::to_string(CeilDiv(d + 1, 3)),
      exact_text(mp), exact, CeilDiv(d + 1, 3) <= mp);
  add("gamma_b <= ceil(3MP/2) (chordal)", exact_text(gb),
      exact_text(CeilDiv(3 * mp, 2)), exact && report.chordal,
      gb <= CeilDiv(3 * mp, 2));
  add("gamma_b <= floor(3MP/2 + 2delta)", exact_text(gb),
      exact_text(FloorDiv(3 * mp + 2 * twice_delta, 2)), exact,
      gb <= FloorDiv(3 * mp + 2 * twice_delta, 2));
  add("gamma_b <= 2MP + 3", exact_text(gb), exact_text(2 * mp + 3), exact,
      gb <= 2 * mp + 3);
  add("|approx| >= ceil((2MP-1)/3) (chordal)",
      std::to_string(report.approx_size), exact_text(CeilDiv(2 * mp - 1, 3)),
      exact && report.chordal, report.approx_size >= CeilDiv(2 * mp - 1, 3));
  add("|approx| >= ceil((2MP-4delta)/3)", std::to_string(report.approx_size),
      exact_text(CeilDiv(2 * mp - 2 * twice_delta, 3)), exact,
      report.approx_size >= CeilDiv(2 * mp - 2 * twice_delta, 3));
  return report;
}

}  // namespace bmp
