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

// C interface to the bmp library. All objects are opaque handles; every
// fallible call returns a bmp_status and leaves a message for
// bmp_last_error() on failure. Strings returned through char** are owned by
// the caller and released with bmp_string_free().

#ifndef BMP_BMP_H_
#define BMP_BMP_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(BMP_BUILDING_LIBRARY)
#    define BMP_API __declspec(dllexport)
#  else
#    define BMP_API __declspec(dllimport)
#  endif
#else
#  define BMP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bmp_status {
  BMP_OK = 0,
  BMP_INVALID_VERTEX = 1,
  BMP_DISCONNECTED_GRAPH = 2,
  BMP_PARSE_ERROR = 3,
  BMP_RADIUS_OUT_OF_RANGE = 4,
  BMP_NEGATIVE_WEIGHT = 5,
  BMP_INCOMPLETE_COVER = 6,
  BMP_INVALID_SYSTEM = 7,
  BMP_SIZE_LIMIT_EXCEEDED = 8,
  BMP_TRIVIAL_GRAPH = 9,
  BMP_NOT_CHORDAL = 10,
  BMP_INVALID_PARAMS = 11,
  BMP_CERTIFICATE_INVALID = 12,
  BMP_IO_ERROR = 13,
  BMP_INTERNAL = 14,
  BMP_NULL_ARGUMENT = 15,
} bmp_status;

typedef struct bmp_graph bmp_graph;

typedef enum bmp_problem {
  BMP_PROBLEM_MP = 0,          // exact multipacking number
  BMP_PROBLEM_GAMMA_B = 1,     // exact broadcast domination number
  BMP_PROBLEM_FRACTIONAL = 2,  // LP optimum MP_f = gamma_b_f
  BMP_PROBLEM_APPROX = 3,      // diametral-path multipacking
  BMP_PROBLEM_BOUNDS = 4,      // every inequality, exact or bounds-only
} bmp_problem;

typedef enum bmp_certificate_kind {
  BMP_CERT_MULTIPACKING = 0,
  BMP_CERT_BROADCAST = 1,
  BMP_CERT_FRACTIONAL = 2,
} bmp_certificate_kind;

typedef struct bmp_solve_options {
  int max_vertices;     // size guard of the exact solvers
  int efficient_only;   // gamma_b: search efficient broadcasts only
  const char* delta;    // NULL, or an upper bound on delta such as "1/2"
} bmp_solve_options;

typedef struct bmp_verify_options {
  unsigned long long seed;
  int fuzz_scale_percent;  // 100 = full batch sizes
  int include_g2;          // exact solves on G_2
} bmp_verify_options;

BMP_API const char* bmp_version(void);
BMP_API const char* bmp_status_name(bmp_status status);
// Message of the last failed call on this thread; "" after a success.
BMP_API const char* bmp_last_error(void);
BMP_API void bmp_string_free(char* s);

// Edge-list text: "n m", then m lines "u v"; '#' comments.
BMP_API bmp_status bmp_graph_from_text(const char* text, bmp_graph** out);
// Generator spec such as "gk:2", "cycle:5" or "random-tree:n=9,seed=4".
BMP_API bmp_status bmp_graph_from_spec(const char* spec, bmp_graph** out);
// endpoints holds 2 * num_edges vertex ids.
BMP_API bmp_status bmp_graph_from_edges(int n, const int* endpoints,
                                        size_t num_edges, bmp_graph** out);
BMP_API void bmp_graph_free(bmp_graph* g);

BMP_API int bmp_graph_num_vertices(const bmp_graph* g);
BMP_API int bmp_graph_num_edges(const bmp_graph* g);
BMP_API bmp_status bmp_graph_to_text(const bmp_graph* g, char** out);
// "vertex label" lines; "" for an unlabeled graph.
BMP_API bmp_status bmp_graph_label_map(const bmp_graph* g, char** out);

BMP_API bmp_status bmp_graph_radius(const bmp_graph* g, int* out);
BMP_API bmp_status bmp_graph_diameter(const bmp_graph* g, int* out);
BMP_API bmp_status bmp_is_chordal(const bmp_graph* g, int* out);
BMP_API bmp_status bmp_hyperbolicity_twice(const bmp_graph* g, int* out);
BMP_API bmp_status bmp_multipacking_number(const bmp_graph* g,
                                           const bmp_solve_options* options,
                                           int* out);
BMP_API bmp_status bmp_broadcast_number(const bmp_graph* g,
                                        const bmp_solve_options* options,
                                        int* out);
// The LP optimum as "p/q" or "p".
BMP_API bmp_status bmp_fractional_number(const bmp_graph* g, char** out);

BMP_API void bmp_solve_options_init(bmp_solve_options* options);
BMP_API void bmp_verify_options_init(bmp_verify_options* options);

// JSON reports; the schemas are documented in docs/json.md.
BMP_API bmp_status bmp_stats_json(const bmp_graph* g, char** out);
// witness_out, when not NULL, receives the witness in certificate text
// format (empty for BMP_PROBLEM_BOUNDS). An exact problem on a graph above
// the size guard returns BMP_SIZE_LIMIT_EXCEEDED with the bounds-only report
// in json_out.
BMP_API bmp_status bmp_solve_json(const bmp_graph* g, bmp_problem problem,
                                  const bmp_solve_options* options,
                                  char** json_out, char** witness_out);
// valid_out receives 1 for a valid certificate (for broadcasts: dominating).
BMP_API bmp_status bmp_check_json(const bmp_graph* g,
                                  bmp_certificate_kind kind,
                                  const char* certificate, char** json_out,
                                  int* valid_out);
// Sparse covering-system dump; max_radius 0 selects the radius.
BMP_API bmp_status bmp_dump_lp(const bmp_graph* g, int max_radius, char** out);
BMP_API bmp_status bmp_verify_paper_json(const bmp_verify_options* options,
                                         char** json_out, int* passed_out);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // BMP_BMP_H_
