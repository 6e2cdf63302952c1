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

#include "bmp/bmp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "json.hpp"

#include "bmp/certificates.hpp"
#include "bmp/error.hpp"
#include "bmp/families.hpp"
#include "bmp/graph.hpp"
#include "bmp/lp.hpp"
#include "bmp/rational.hpp"
#include "bmp/recognition.hpp"
#include "bmp/reproduction.hpp"
#include "bmp/solvers.hpp"

struct bmp_graph {
  bmp::Graph graph;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

template <typename Body>
bmp_status Guard(Body&& body) {
  try {
    body();
    last_error.clear();
    return BMP_OK;
  } catch (const bmp::Error& e) {
    last_error = e.what();
    return static_cast<bmp_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return BMP_INTERNAL;
}

void Require(const void* p, const char* what) {
  if (p == nullptr) {
    throw bmp::Error(static_cast<bmp::ErrorCode>(BMP_NULL_ARGUMENT),
                     std::string(what) + " is NULL");
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bmp::SolveOptions ToOptions(const bmp_solve_options* options) {
  bmp::SolveOptions out;
  if (options != nullptr) {
    out.max_vertices = options->max_vertices;
    out.efficient_only = options->efficient_only != 0;
  }
  return out;
}

std::optional<bmp::HalfInteger> ToDelta(const bmp_solve_options* options) {
  if (options == nullptr || options->delta == nullptr) return std::nullopt;
  return bmp::HalfInteger::Parse(options->delta);
}

std::string Str(const bmp::Rational& q) { return bmp::FormatRational(q); }

json Towers(const bmp::Broadcast& f) {
  json towers = json::array();
  for (bmp::Vertex v : f.towers()) {
    towers.push_back({{"vertex", v}, {"radius", f.radius[v]}});
  }
  return towers;
}

json Weights(const bmp::FractionalMultipacking& w) {
  json weights = json::array();
  for (std::size_t v = 0; v < w.weight.size(); ++v) {
    if (w.weight[v] != 0) {
      weights.push_back({{"vertex", v}, {"weight", Str(w.weight[v])}});
    }
  }
  return weights;
}

json SolveJson(const char* problem, const bmp::Graph& g,
               const bmp::SolveReport& r, std::string& witness) {
  json j = {{"problem", problem}, {"optimum", r.optimum}};
  if (const auto* m = std::get_if<bmp::Multipacking>(&r.witness)) {
    j["witness"] = m->members;
    witness = bmp::FormatMultipacking(*m);
  } else {
    const auto& f = std::get<bmp::Broadcast>(r.witness);
    j["witness"] = Towers(f);
    j["efficient"] = bmp::CheckBroadcast(g, f).efficient;
    witness = bmp::FormatBroadcast(f);
  }
  json trace = json::array();
  for (auto [lo, hi] : r.bounds_trace) trace.push_back({lo, hi});
  j["lower_bound_trace"] = trace;
  j["nodes"] = r.nodes;
  j["millis"] = r.millis;
  return j;
}

json GuaranteeJson(const bmp::ApproxGuarantee& a) {
  return {{"radius", a.radius},
          {"diameter", a.diameter},
          {"delta", a.delta.ToString()},
          {"approx_size", a.approx_size},
          {"radius_guarantee", a.radius_guarantee},
          {"chain_holds", a.chain_holds}};
}

json BoundsJson(const bmp::BoundReport& r) {
  json checks = json::array();
  for (const bmp::BoundCheck& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"applicable", c.applicable},
                      {"holds", c.holds}});
  }
  auto optional_int = [](const std::optional<int>& v) {
    return v ? json(*v) : json(nullptr);
  };
  return {{"problem", "bounds"},
          {"mode", r.exact ? "exact" : "bounds-only"},
          {"n", r.n},
          {"radius", r.radius},
          {"diameter", r.diameter},
          {"chordal", r.chordal},
          {"delta", r.delta.ToString()},
          {"delta_exact", r.delta_exact},
          {"mp_f", Str(r.mp_f)},
          {"approx_size", r.approx_size},
          {"mp", optional_int(r.mp)},
          {"gamma_b", optional_int(r.gamma_b)},
          {"mp_bounds", {r.mp_lower, r.mp_upper}},
          {"gamma_b_bounds", {r.gamma_b_lower, r.gamma_b_upper}},
          {"checks", checks},
          {"all_hold", r.all_hold()}};
}

json Solve(const bmp::Graph& g, bmp_problem problem,
           const bmp_solve_options* options, std::string& witness) {
  const bmp::SolveOptions solve = ToOptions(options);
  switch (problem) {
    case BMP_PROBLEM_MP:
      return SolveJson("mp", g, bmp::SolveMultipackingNumber(g, solve),
                       witness);
    case BMP_PROBLEM_GAMMA_B:
      return SolveJson("gamma-b", g, bmp::SolveBroadcastNumber(g, solve),
                       witness);
    case BMP_PROBLEM_FRACTIONAL: {
      const bmp::FractionalNumbers f = bmp::ComputeFractionalNumbers(g);
      json primal = json::array();
      for (std::size_t c = 0; c < f.system.columns.size(); ++c) {
        if (f.solution.primal[c] != 0) {
          primal.push_back({{"center", f.system.columns[c].center},
                            {"radius", f.system.columns[c].radius},
                            {"value", Str(f.solution.primal[c])}});
        }
      }
      witness = bmp::FormatFractionalMultipacking(f.witness);
      return {{"problem", "fractional"},
              {"mp_f", Str(f.mp_f)},
              {"gamma_b_f", Str(f.gamma_b_f)},
              {"witness", Weights(f.witness)},
              {"primal", primal},
              {"rows", f.system.num_rows},
              {"columns", f.system.columns.size()},
              {"pivots", f.solution.pivots}};
    }
    case BMP_PROBLEM_APPROX: {
      const bmp::ApproxReport a = bmp::ApproximateMultipacking(g);
      witness = bmp::FormatMultipacking(a.multipacking);
      json j = {{"problem", "approx"},
                {"size", a.multipacking.members.size()},
                {"multipacking", a.multipacking.members},
                {"path", a.path},
                {"guarantee", a.guarantee}};
      if (bmp::IsChordal(g).chordal) {
        j["chordal"] = GuaranteeJson(
            bmp::ComputeApproxGuarantee(g, bmp::GuaranteeKind::kChordal));
      }
      j["hyperbolic"] = GuaranteeJson(bmp::ComputeApproxGuarantee(
          g, bmp::GuaranteeKind::kHyperbolic, ToDelta(options)));
      return j;
    }
    case BMP_PROBLEM_BOUNDS:
      witness.clear();
      return BoundsJson(bmp::ComputeBoundReport(g, solve, ToDelta(options)));
  }
  throw bmp::Error(bmp::ErrorCode::kInvalidParams, "unknown problem");
}

}  // namespace

extern "C" {

const char* bmp_version(void) { return "1.0.0"; }

const char* bmp_status_name(bmp_status status) {
  switch (status) {
    case BMP_OK: return "Ok";
    case BMP_NULL_ARGUMENT: return "NullArgument";
    default: break;
  }
  if (status >= BMP_INVALID_VERTEX && status <= BMP_INTERNAL) {
    return bmp::ErrorCodeName(static_cast<bmp::ErrorCode>(status)).data();
  }
  return "Unknown";
}

const char* bmp_last_error(void) { return last_error.c_str(); }

void bmp_string_free(char* s) { std::free(s); }

bmp_status bmp_graph_from_text(const char* text, bmp_graph** out) {
  return Guard([&] {
    Require(text, "text");
    Require(out, "out");
    *out = new bmp_graph{bmp::ParseEdgeList(text)};
  });
}

bmp_status bmp_graph_from_spec(const char* spec, bmp_graph** out) {
  return Guard([&] {
    Require(spec, "spec");
    Require(out, "out");
    *out = new bmp_graph{bmp::GraphFromSpec(spec)};
  });
}

bmp_status bmp_graph_from_edges(int n, const int* endpoints, size_t num_edges,
                                bmp_graph** out) {
  return Guard([&] {
    Require(out, "out");
    if (num_edges > 0) Require(endpoints, "endpoints");
    std::vector<std::pair<bmp::Vertex, bmp::Vertex>> edges;
    edges.reserve(num_edges);
    for (size_t i = 0; i < num_edges; ++i) {
      edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    }
    *out = new bmp_graph{bmp::Graph(n, edges)};
  });
}

void bmp_graph_free(bmp_graph* g) { delete g; }

int bmp_graph_num_vertices(const bmp_graph* g) {
  return g == nullptr ? 0 : g->graph.num_vertices();
}

int bmp_graph_num_edges(const bmp_graph* g) {
  return g == nullptr ? 0 : g->graph.num_edges();
}

bmp_status bmp_graph_to_text(const bmp_graph* g, char** out) {
  return Guard([&] {
    Require(g, "graph");
    Require(out, "out");
    *out = CopyString(bmp::FormatEdgeList(g->graph));
  });
}

bmp_status bmp_graph_label_map(const bmp_graph* g, char** out) {
  return Guard([&] {
    Require(g, "graph");
    Require(out, "out");
    *out = CopyString(g->graph.has_labels() ? bmp::FormatLabelMap(g->graph)
                                            : std::string());
  });
}

bmp_status bmp_graph_radius(const bmp_graph* g, int* out) {
  return Guard([&] {
    Require(g, "graph");
    Require(out, "out");
    *out = bmp::ComputeMetrics(g->graph).radius;
  });
}

bmp_status bmp_graph_diameter(const bmp_graph* g, int* out) {
  return Guard([&] {
    Require(g, "graph");
    Require(out, "out");
    *out = bmp::ComputeMetrics(g->graph).diameter;
  });
}

bmp_status bmp_is_chordal(const bmp_graph* g, int* out) {
  return Guard([&] {
    Require(g, "graph");
    Require(out, "out");
    *out = bmp::IsChordal(g->graph).chordal ? 1 : 0;
  });
}

bmp_status bmp_hyperbolicity_twice(const bmp_graph* g, int* out) {
  return Guard([&] {
    Require(g, "graph");
    Require(out, "out");
    *out = bmp::Hyperbolicity(g->graph).twice_value();
  });
}

bmp_status bmp_multipacking_number(const bmp_graph* g,
                                   const bmp_solve_options* options,
                                   int* out) {
  return Guard([&] {
    Require(g, "graph");
    Require(out, "out");
    *out = bmp::SolveMultipackingNumber(g->graph, ToOptions(options)).optimum;
  });
}

bmp_status bmp_broadcast_number(const bmp_graph* g,
                                const bmp_solve_options* options, int* out) {
  return Guard([&] {
    Require(g, "graph");
    Require(out, "out");
    *out = bmp::SolveBroadcastNumber(g->graph, ToOptions(options)).optimum;
  });
}

bmp_status bmp_fractional_number(const bmp_graph* g, char** out) {
  return Guard([&] {
    Require(g, "graph");
    Require(out, "out");
    *out = CopyString(Str(bmp::ComputeFractionalNumbers(g->graph).mp_f));
  });
}

void bmp_solve_options_init(bmp_solve_options* options) {
  if (options == nullptr) return;
  options->max_vertices = bmp::kDefaultMaxVertices;
  options->efficient_only = 0;
  options->delta = nullptr;
}

void bmp_verify_options_init(bmp_verify_options* options) {
  if (options == nullptr) return;
  const bmp::ReproductionOptions defaults;
  options->seed = defaults.seed;
  options->fuzz_scale_percent = 100;
  options->include_g2 = defaults.include_g2 ? 1 : 0;
}

bmp_status bmp_stats_json(const bmp_graph* g, char** out) {
  return Guard([&] {
    Require(g, "graph");
    Require(out, "out");
    const bmp::GraphMetrics m = bmp::ComputeMetrics(g->graph);
    const bmp::ChordalityWitness c = bmp::IsChordal(g->graph);
    const bmp::HalfInteger delta = bmp::Hyperbolicity(g->graph);
    json j = {{"n", g->graph.num_vertices()},
              {"m", g->graph.num_edges()},
              {"radius", m.radius},
              {"diameter", m.diameter},
              {"center", m.center},
              {"eccentricity", m.eccentricity},
              {"chordal", c.chordal},
              {"delta", delta.ToString()},
              {"delta_twice", delta.twice_value()}};
    if (c.chordal) {
      j["elimination_order"] = c.elimination_order;
    } else {
      j["chordless_cycle"] = c.chordless_cycle;
    }
    *out = CopyString(j.dump());
  });
}

bmp_status bmp_solve_json(const bmp_graph* g, bmp_problem problem,
                          const bmp_solve_options* options, char** json_out,
                          char** witness_out) {
  return Guard([&] {
    Require(g, "graph");
    Require(json_out, "json_out");
    *json_out = nullptr;
    std::string witness;
    json j;
    try {
      j = Solve(g->graph, problem, options, witness);
    } catch (const bmp::Error& e) {
      if (e.code() != bmp::ErrorCode::kSizeLimitExceeded) throw;
      // Degrade to the bounds-only report and still signal the guard.
      json bounds = BoundsJson(bmp::ComputeBoundReport(
          g->graph, ToOptions(options), ToDelta(options)));
      bounds["size_limit_exceeded"] = e.what();
      *json_out = CopyString(bounds.dump());
      if (witness_out != nullptr) *witness_out = nullptr;
      throw;
    }
    *json_out = CopyString(j.dump());
    if (witness_out != nullptr) *witness_out = CopyString(witness);
  });
}

bmp_status bmp_check_json(const bmp_graph* g, bmp_certificate_kind kind,
                          const char* certificate, char** json_out,
                          int* valid_out) {
  return Guard([&] {
    Require(g, "graph");
    Require(certificate, "certificate");
    Require(json_out, "json_out");
    const int n = g->graph.num_vertices();
    json j;
    bool valid = false;
    switch (kind) {
      case BMP_CERT_MULTIPACKING: {
        const bmp::Multipacking m = bmp::ParseMultipacking(certificate, n);
        const bmp::MultipackingCheck c = bmp::CheckMultipacking(g->graph, m);
        valid = c.valid;
        j = {{"kind", "multipacking"},
             {"valid", c.valid},
             {"size", m.members.size()}};
        if (c.violation) {
          j["violation"] = {{"center", c.violation->center},
                            {"radius", c.violation->radius},
                            {"members_in_ball", c.violation->members_in_ball}};
        }
        break;
      }
      case BMP_CERT_BROADCAST: {
        const bmp::BroadcastCheck c =
            bmp::CheckBroadcast(g->graph, bmp::ParseBroadcast(certificate, n));
        valid = c.dominating;
        j = {{"kind", "broadcast"},   {"valid", c.dominating},
             {"dominating", c.dominating}, {"efficient", c.efficient},
             {"cost", c.cost},        {"uncovered", c.uncovered},
             {"overheard", c.overheard}};
        break;
      }
      case BMP_CERT_FRACTIONAL: {
        const bmp::FractionalCheck c = bmp::CheckFractionalMultipacking(
            g->graph, bmp::ParseFractionalMultipacking(certificate, n));
        valid = c.valid;
        j = {{"kind", "fractional"}, {"valid", c.valid}, {"total", Str(c.total)}};
        if (c.violation) {
          j["violation"] = {{"center", c.violation->center},
                            {"radius", c.violation->radius},
                            {"ball_weight", Str(c.violation->ball_weight)}};
        }
        break;
      }
      default:
        throw bmp::Error(bmp::ErrorCode::kInvalidParams,
                         "unknown certificate kind");
    }
    *json_out = CopyString(j.dump());
    if (valid_out != nullptr) *valid_out = valid ? 1 : 0;
  });
}

bmp_status bmp_dump_lp(const bmp_graph* g, int max_radius, char** out) {
  return Guard([&] {
    Require(g, "graph");
    Require(out, "out");
    *out = CopyString(bmp::FormatCoveringSystem(
        bmp::BuildCoveringSystem(g->graph, max_radius)));
  });
}

bmp_status bmp_verify_paper_json(const bmp_verify_options* options,
                                 char** json_out, int* passed_out) {
  return Guard([&] {
    Require(json_out, "json_out");
    bmp::ReproductionOptions repro;
    if (options != nullptr) {
      if (options->fuzz_scale_percent < 0) {
        throw bmp::Error(bmp::ErrorCode::kInvalidParams,
                         "fuzz scale must be nonnegative");
      }
      auto scale = [&](int& count) {
        count = static_cast<int>(static_cast<long long>(count) *
                                 options->fuzz_scale_percent / 100);
      };
      repro.seed = options->seed;
      scale(repro.duality_graphs);
      scale(repro.chordal_graphs);
      scale(repro.hyperbolic_graphs);
      scale(repro.oracle_graphs);
      scale(repro.tree_graphs);
      repro.include_g2 = options->include_g2 != 0;
    }
    json rows = json::array();
    int failed = 0;
    for (const bmp::ReproductionRow& r : bmp::RunReproduction(repro)) {
      if (!r.passed) ++failed;
      rows.push_back({{"group", r.group},
                      {"name", r.name},
                      {"expected", r.expected},
                      {"computed", r.computed},
                      {"passed", r.passed},
                      {"millis", r.millis}});
    }
    const json j = {{"rows", rows},
                    {"total", rows.size()},
                    {"failed", failed},
                    {"passed", failed == 0}};
    *json_out = CopyString(j.dump());
    if (passed_out != nullptr) *passed_out = failed == 0 ? 1 : 0;
  });
}

}  // extern "C"
