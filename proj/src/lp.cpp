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

#include "bmp/lp.hpp"

#include <algorithm>
#include <sstream>

#include "bmp/error.hpp"

namespace bmp {

CoveringSystem BuildCoveringSystem(const Graph& g, int max_radius) {
  const GraphMetrics metrics = ComputeMetrics(g);
  const int n = g.num_vertices();
  if (n == 1) {
    throw Error(ErrorCode::kTrivialGraph,
                "broadcast radii on K_1 are bounded by diam = 0");
  }
  if (max_radius == 0) max_radius = metrics.radius;
  if (max_radius < 1 || max_radius > metrics.diameter) {
    throw Error(ErrorCode::kInvalidParams,
                "max_radius " + std::to_string(max_radius) + " outside 1.." +
                    std::to_string(metrics.diameter));
  }
  CoveringSystem system;
  system.num_rows = n;
  const DistanceMatrix& dist = g.distances();
  for (Vertex v = 0; v < n; ++v) {
    auto row = dist.row(v);
    std::size_t previous = 1;  // |N_0[v]|
    for (int k = 1; k <= max_radius; ++k) {
      CoveringColumn column{v, k, {}};
      for (Vertex u = 0; u < n; ++u) {
        if (row[u] <= k) column.rows.push_back(u);
      }
      // Balls are nested, so equal size means the same ball at higher cost.
      if (column.rows.size() == previous) continue;
      previous = column.rows.size();
      system.columns.push_back(std::move(column));
    }
  }
  return system;
}

namespace {

void Validate(const CoveringSystem& system) {
  if (system.num_rows < 0) {
    throw Error(ErrorCode::kInvalidSystem, "negative row count");
  }
  for (std::size_t j = 0; j < system.columns.size(); ++j) {
    const auto& column = system.columns[j];
    if (column.radius < 1) {
      throw Error(ErrorCode::kInvalidSystem,
                  "column " + std::to_string(j) + " has cost < 1");
    }
    for (std::size_t k = 0; k < column.rows.size(); ++k) {
      const int r = column.rows[k];
      if (r < 0 || r >= system.num_rows ||
          (k > 0 && column.rows[k - 1] >= r)) {
        throw Error(ErrorCode::kInvalidSystem,
                    "column " + std::to_string(j) +
                        " has an unsorted or out-of-range row index");
      }
    }
  }
}

// Dense tableau for  -A x + s = -1  with s the surplus variables.
class DualSimplex {
 public:
  explicit DualSimplex(const CoveringSystem& system)
      : m_(system.num_rows),
        num_x_(static_cast<int>(system.columns.size())),
        width_(num_x_ + m_),
        tableau_(m_, std::vector<Rational>(width_, Rational(0))),
        rhs_(m_, Rational(-1)),
        reduced_(width_, Rational(0)),
        basis_(m_) {
    for (int j = 0; j < num_x_; ++j) {
      for (int r : system.columns[j].rows) tableau_[r][j] = -1;
      reduced_[j] = system.cost(j);
    }
    for (int i = 0; i < m_; ++i) {
      tableau_[i][num_x_ + i] = 1;
      basis_[i] = num_x_ + i;
    }
  }

  // Returns false when the primal is infeasible.
  bool Run() {
    for (;;) {
      int leave = -1;
      for (int i = 0; i < m_; ++i) {
        if (rhs_[i] < 0 && (leave < 0 || basis_[i] < basis_[leave])) leave = i;
      }
      if (leave < 0) return true;

      const auto& row = tableau_[leave];
      int enter = -1;
      for (int j = 0; j < width_; ++j) {
        if (row[j] >= 0) continue;
        // d_j / -a_j < d_e / -a_e, all denominators positive.
        if (enter < 0 || reduced_[j] * row[enter] > reduced_[enter] * row[j]) {
          enter = j;
        }
      }
      if (enter < 0) return false;
      Pivot(leave, enter);
      ++pivots_;
    }
  }

  int pivots() const { return pivots_; }

  std::vector<Rational> Primal() const {
    std::vector<Rational> x(num_x_, Rational(0));
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < num_x_) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

  std::vector<Rational> Dual() const {
    return {reduced_.begin() + num_x_, reduced_.end()};
  }

 private:
  void Pivot(int r, int e) {
    auto& prow = tableau_[r];
    const Rational pivot = prow[e];
    std::vector<int> support;
    for (int j = 0; j < width_; ++j) {
      if (prow[j] != 0) {
        prow[j] /= pivot;
        support.push_back(j);
      }
    }
    rhs_[r] /= pivot;
    Rational factor;
    for (int i = 0; i < m_; ++i) {
      if (i == r || tableau_[i][e] == 0) continue;
      factor = tableau_[i][e];
      auto& row = tableau_[i];
      for (int j : support) row[j] -= factor * prow[j];
      rhs_[i] -= factor * rhs_[r];
    }
    if (reduced_[e] != 0) {
      factor = reduced_[e];
      for (int j : support) reduced_[j] -= factor * prow[j];
    }
    basis_[r] = e;
  }

  int m_;
  int num_x_;
  int width_;
  std::vector<std::vector<Rational>> tableau_;
  std::vector<Rational> rhs_;
  std::vector<Rational> reduced_;
  std::vector<int> basis_;
  int pivots_ = 0;
};

void CheckOptimality(const CoveringSystem& system, const LpSolution& s) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInternal, "LP optimality check failed: " + what);
  };
  std::vector<Rational> coverage(system.num_rows, Rational(0));
  Rational primal_objective = 0;
  for (std::size_t j = 0; j < system.columns.size(); ++j) {
    if (s.primal[j] < 0) fail("negative primal value");
    if (s.primal[j] == 0) continue;
    primal_objective += system.cost(j) * s.primal[j];
    for (int r : system.columns[j].rows) coverage[r] += s.primal[j];
  }
  for (const Rational& c : coverage) {
    if (c < 1) fail("row not covered");
  }
  Rational dual_objective = 0;
  for (const Rational& y : s.dual) {
    if (y < 0) fail("negative dual value");
    dual_objective += y;
  }
  for (std::size_t j = 0; j < system.columns.size(); ++j) {
    Rational load = 0;
    for (int r : system.columns[j].rows) load += s.dual[r];
    if (load > system.cost(j)) fail("dual constraint violated");
  }
  if (primal_objective != dual_objective || primal_objective != s.objective) {
    fail("primal and dual objectives differ");
  }
}

}  // namespace

LpSolution SolveLp(const CoveringSystem& system) {
  Validate(system);
  LpSolution solution;
  std::vector<char> coverable(system.num_rows, 0);
  for (const auto& column : system.columns) {
    for (int r : column.rows) coverable[r] = 1;
  }
  if (std::find(coverable.begin(), coverable.end(), 0) != coverable.end()) {
    return solution;
  }

  DualSimplex simplex(system);
  if (!simplex.Run()) return solution;
  solution.status = LpStatus::kOptimal;
  solution.primal = simplex.Primal();
  solution.dual = simplex.Dual();
  solution.pivots = simplex.pivots();
  solution.objective = 0;
  for (const Rational& y : solution.dual) solution.objective += y;
  CheckOptimality(system, solution);
  return solution;
}

FractionalNumbers ComputeFractionalNumbers(const Graph& g) {
  FractionalNumbers result;
  result.system = BuildCoveringSystem(g);
  result.solution = SolveLp(result.system);
  if (result.solution.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kInternal, "covering LP reported infeasible");
  }
  result.mp_f = result.solution.objective;
  result.gamma_b_f = 0;
  for (std::size_t j = 0; j < result.system.columns.size(); ++j) {
    result.gamma_b_f += result.system.cost(j) * result.solution.primal[j];
  }
  result.witness.weight = result.solution.dual;
  const FractionalCheck check =
      CheckFractionalMultipacking(g, result.witness);
  if (!check.valid) {
    throw Error(ErrorCode::kInternal,
                "LP dual is not a fractional multipacking");
  }
  return result;
}

std::string FormatCoveringSystem(const CoveringSystem& system) {
  std::ostringstream out;
  std::size_t nonzeros = 0;
  for (const auto& column : system.columns) nonzeros += column.rows.size();
  out << "# covering system rows=" << system.num_rows
      << " cols=" << system.columns.size() << " nnz=" << nonzeros << '\n';
  for (std::size_t j = 0; j < system.columns.size(); ++j) {
    out << "# col " << j << " = ball(" << system.columns[j].center << ", "
        << system.columns[j].radius << ")\n";
  }
  out << "cost";
  for (std::size_t j = 0; j < system.columns.size(); ++j) {
    out << ' ' << system.cost(j);
  }
  out << '\n';
  for (std::size_t j = 0; j < system.columns.size(); ++j) {
    for (int r : system.columns[j].rows) out << r << ' ' << j << '\n';
  }
  return out.str();
}

}  // namespace bmp
