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

// Test-side reference implementations. They read only the edge list of a
// Graph and recompute everything from scratch with the most direct method,
// so agreement with the library is evidence rather than tautology.

#ifndef BMP_TESTS_ORACLES_HPP_
#define BMP_TESTS_ORACLES_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bmp/graph.hpp"

namespace oracle {

inline constexpr int kInf = 1 << 20;

struct Raw {
  int n = 0;
  std::vector<std::vector<char>> adj;
  std::vector<std::vector<int>> dist;  // Floyd-Warshall, kInf if unreachable
};

inline Raw FromGraph(const bmp::Graph& g) {
  Raw r;
  r.n = g.num_vertices();
  r.adj.assign(r.n, std::vector<char>(r.n, 0));
  r.dist.assign(r.n, std::vector<int>(r.n, kInf));
  for (const bmp::Edge& e : g.edges()) {
    r.adj[e.u][e.v] = r.adj[e.v][e.u] = 1;
    r.dist[e.u][e.v] = r.dist[e.v][e.u] = 1;
  }
  for (int v = 0; v < r.n; ++v) r.dist[v][v] = 0;
  for (int k = 0; k < r.n; ++k) {
    for (int i = 0; i < r.n; ++i) {
      for (int j = 0; j < r.n; ++j) {
        r.dist[i][j] = std::min(r.dist[i][j], r.dist[i][k] + r.dist[k][j]);
      }
    }
  }
  return r;
}

inline int Eccentricity(const Raw& r, int v) {
  return *std::max_element(r.dist[v].begin(), r.dist[v].end());
}

inline int Radius(const Raw& r) {
  int best = kInf;
  for (int v = 0; v < r.n; ++v) best = std::min(best, Eccentricity(r, v));
  return best;
}

inline int Diameter(const Raw& r) {
  int best = 0;
  for (int v = 0; v < r.n; ++v) best = std::max(best, Eccentricity(r, v));
  return best;
}

// |N_k[v] ∩ M| <= k for all v and all k in 1..n.
inline bool IsMultipacking(const Raw& r, const std::vector<int>& m) {
  for (int v = 0; v < r.n; ++v) {
    for (int k = 1; k <= r.n; ++k) {
      int inside = 0;
      for (int u : m) inside += r.dist[v][u] <= k;
      if (inside > k) return false;
    }
  }
  return true;
}

inline int MultipackingNumber(const Raw& r) {
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << r.n); ++mask) {
    std::vector<int> m;
    for (int v = 0; v < r.n; ++v) {
      if (mask >> v & 1u) m.push_back(v);
    }
    if (static_cast<int>(m.size()) > best && IsMultipacking(r, m)) {
      best = static_cast<int>(m.size());
    }
  }
  return best;
}

inline bool Dominates(const Raw& r, const std::vector<int>& f) {
  for (int v = 0; v < r.n; ++v) {
    bool heard = false;
    for (int t = 0; t < r.n && !heard; ++t) {
      heard = f[t] > 0 && r.dist[t][v] <= f[t];
    }
    if (!heard) return false;
  }
  return true;
}

inline bool Efficient(const Raw& r, const std::vector<int>& f) {
  for (int v = 0; v < r.n; ++v) {
    int heard = 0;
    for (int t = 0; t < r.n; ++t) heard += f[t] > 0 && r.dist[t][v] <= f[t];
    if (heard > 1) return false;
  }
  return true;
}

// Visits every broadcast with cost at most `budget` and radii <= diameter.
inline void ForEachBroadcast(const Raw& r, int budget,
                             const std::function<void(const std::vector<int>&)>& visit) {
  const int diameter = Diameter(r);
  std::vector<int> f(r.n, 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == r.n) {
      visit(f);
      return;
    }
    for (int k = 0; k <= std::min(left, diameter); ++k) {
      f[v] = k;
      rec(v + 1, left - k);
    }
    f[v] = 0;
  };
  rec(0, budget);
}

struct BroadcastOracle {
  int gamma_b = 0;
  bool efficient_optimum = false;
};

// Exhaustive over all broadcasts of cost <= radius (the centre broadcast
// always dominates, so the optimum is among them).
inline BroadcastOracle BroadcastNumber(const Raw& r) {
  BroadcastOracle out{Radius(r), false};
  ForEachBroadcast(r, Radius(r), [&](const std::vector<int>& f) {
    const int cost = std::accumulate(f.begin(), f.end(), 0);
    if (cost == 0 || cost > out.gamma_b || !Dominates(r, f)) return;
    const bool efficient = Efficient(r, f);
    if (cost < out.gamma_b) {
      out.gamma_b = cost;
      out.efficient_optimum = efficient;
    } else {
      out.efficient_optimum = out.efficient_optimum || efficient;
    }
  });
  return out;
}

// Twice the four-point hyperbolicity, with no pruning.
inline int HyperbolicityTwice(const Raw& r) {
  int best = 0;
  for (int a = 0; a < r.n; ++a)
    for (int b = a + 1; b < r.n; ++b)
      for (int c = b + 1; c < r.n; ++c)
        for (int d = c + 1; d < r.n; ++d) {
          int s[3] = {r.dist[a][b] + r.dist[c][d], r.dist[a][c] + r.dist[b][d],
                      r.dist[a][d] + r.dist[b][c]};
          std::sort(s, s + 3);
          best = std::max(best, s[2] - s[1]);
        }
  return best;
}

// Chordal iff repeatedly deleting a simplicial vertex empties the graph.
inline bool IsChordal(const Raw& r) {
  std::vector<char> alive(r.n, 1);
  for (int removed = 0; removed < r.n; ++removed) {
    int simplicial = -1;
    for (int v = 0; v < r.n && simplicial < 0; ++v) {
      if (!alive[v]) continue;
      bool clique = true;
      for (int a = 0; a < r.n && clique; ++a) {
        if (!alive[a] || !r.adj[v][a]) continue;
        for (int b = a + 1; b < r.n && clique; ++b) {
          if (alive[b] && r.adj[v][b] && !r.adj[a][b]) clique = false;
        }
      }
      if (clique) simplicial = v;
    }
    if (simplicial < 0) return false;
    alive[simplicial] = 0;
  }
  return true;
}

// MP_f by vertex enumeration of the packing polytope
// {y >= 0 : y(N_k[v]) <= k}: every choice of n tight constraints with a
// unique solution is solved exactly and kept when feasible. Tiny n only.
inline mpq_class FractionalByVertexEnumeration(const Raw& r,
                                               std::vector<mpq_class>* best_y = nullptr) {
  using Row = std::vector<mpq_class>;
  std::vector<Row> a;
  std::vector<mpq_class> b;
  for (int v = 0; v < r.n; ++v) {
    Row row(r.n, 0);
    row[v] = -1;  // -y_v <= 0
    a.push_back(row);
    b.push_back(0);
  }
  for (int v = 0; v < r.n; ++v) {
    for (int k = 1; k <= Diameter(r); ++k) {
      Row row(r.n, 0);
      for (int u = 0; u < r.n; ++u) row[u] = r.dist[v][u] <= k ? 1 : 0;
      a.push_back(row);
      b.push_back(k);
    }
  }
  const int m = static_cast<int>(a.size());
  mpq_class best = -1;
  std::vector<int> pick(r.n);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == r.n) {
      std::vector<Row> sys;
      for (int i : pick) {
        Row row = a[i];
        row.push_back(b[i]);
        sys.push_back(row);
      }
      for (int col = 0; col < r.n; ++col) {
        int p = col;
        while (p < r.n && sys[p][col] == 0) ++p;
        if (p == r.n) return;  // singular
        std::swap(sys[p], sys[col]);
        for (int i = 0; i < r.n; ++i) {
          if (i == col || sys[i][col] == 0) continue;
          const mpq_class factor = sys[i][col] / sys[col][col];
          for (int j = col; j <= r.n; ++j) sys[i][j] -= factor * sys[col][j];
        }
      }
      std::vector<mpq_class> y(r.n);
      for (int i = 0; i < r.n; ++i) y[i] = sys[i][r.n] / sys[i][i];
      for (int i = 0; i < m; ++i) {
        mpq_class lhs = 0;
        for (int j = 0; j < r.n; ++j) lhs += a[i][j] * y[j];
        if (lhs > b[i]) return;
      }
      mpq_class total = 0;
      for (const mpq_class& q : y) total += q;
      if (total > best) {
        best = total;
        if (best_y != nullptr) *best_y = y;
      }
      return;
    }
    for (int i = start; i < m; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

// Seeded generators, deliberately different from the library's.
class Fuzz {
 public:
  explicit Fuzz(std::uint64_t seed) : rng_(seed) {}

  int Int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool Coin(double p) { return (rng_() >> 11) * 0x1.0p-53 < p; }

  // Each vertex of a shuffled order hangs off a uniformly chosen earlier one;
  // then every other pair is joined with probability p.
  bmp::Graph Connected(int n, double p) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng_);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int i = 1; i < n; ++i) {
      const int u = order[i], v = order[Int(0, i - 1)];
      edges.emplace_back(u, v);
      adj[u][v] = adj[v][u] = 1;
    }
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!adj[u][v] && Coin(p)) edges.emplace_back(u, v);
      }
    }
    return bmp::Graph(n, edges);
  }

  bmp::Graph Tree(int n) { return Connected(n, 0.0); }

  // Each new vertex is joined to a clique of size 1..max_clique, grown from a
  // random earlier vertex through common neighbours. Small cliques produce
  // 2-tree-like graphs, which contain suns.
  bmp::Graph Chordal(int n, int max_clique) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
      const int want = Int(1, max_clique);
      std::vector<int> clique{Int(0, v - 1)};
      std::vector<int> pool(v);
      std::iota(pool.begin(), pool.end(), 0);
      std::shuffle(pool.begin(), pool.end(), rng_);
      for (int u : pool) {
        if (static_cast<int>(clique.size()) >= want) break;
        if (std::find(clique.begin(), clique.end(), u) != clique.end()) continue;
        if (std::all_of(clique.begin(), clique.end(), [&](int c) { return adj[c][u]; })) {
          clique.push_back(u);
        }
      }
      for (int u : clique) {
        adj[u][v] = adj[v][u] = 1;
        edges.emplace_back(u, v);
      }
    }
    return bmp::Graph(n, edges);
  }

  std::vector<int> Permutation(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

inline bmp::Graph Permute(const bmp::Graph& g, const std::vector<int>& p) {
  std::vector<std::pair<int, int>> edges;
  for (const bmp::Edge& e : g.edges()) edges.emplace_back(p[e.u], p[e.v]);
  return bmp::Graph(g.num_vertices(), edges);
}

}  // namespace oracle

#endif  // BMP_TESTS_ORACLES_HPP_
