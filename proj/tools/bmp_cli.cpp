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

// bmp: broadcast domination and multipacking from the command line.
//
//   bmp stats INPUT
//   bmp solve {mp|gamma-b|fractional|approx|bounds} INPUT
//   bmp check {multipacking|broadcast|fractional} INPUT CERTIFICATE
//   bmp gen SPEC [-o FILE] [--label-map FILE]
//   bmp verify-paper
//
// INPUT is an edge-list file, "-" for standard input, or a generator spec
// such as "gk:2". Exit codes: 0 ok, 1 invalid certificate or failed
// verification, 2 input error, 3 graph precondition, 4 size guard.

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bmp/bmp.h"
#include "json.hpp"

namespace {

using nlohmann::json;

enum Exit {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitInput = 2,
  kExitPrecondition = 3,
  kExitSizeGuard = 4,
};

int ExitFor(bmp_status status) {
  switch (status) {
    case BMP_OK:
      return kExitOk;
    case BMP_DISCONNECTED_GRAPH:
    case BMP_TRIVIAL_GRAPH:
    case BMP_NOT_CHORDAL:
      return kExitPrecondition;
    case BMP_SIZE_LIMIT_EXCEEDED:
      return kExitSizeGuard;
    case BMP_CERTIFICATE_INVALID:
    case BMP_INTERNAL:
      return kExitInvalid;
    default:
      return kExitInput;
  }
}

// Thrown to unwind to main with an exit code; the message is already out.
struct ExitRequest {
  int code;
};

[[noreturn]] void Fail(bmp_status status) {
  std::cerr << "bmp: " << bmp_status_name(status) << ": " << bmp_last_error()
            << "\n";
  throw ExitRequest{ExitFor(status)};
}

[[noreturn]] void FailInput(const std::string& message) {
  std::cerr << "bmp: " << message << "\n";
  throw ExitRequest{kExitInput};
}

void Check(bmp_status status) {
  if (status != BMP_OK) Fail(status);
}

struct StringDeleter {
  void operator()(char* s) const { bmp_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
  void operator()(bmp_graph* g) const { bmp_graph_free(g); }
};
using OwnedGraph = std::unique_ptr<bmp_graph, GraphDeleter>;

std::string Take(char* s) {
  OwnedString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string ReadStream(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string ReadSource(const std::string& source) {
  if (source == "-") return ReadStream(std::cin);
  std::ifstream in(source, std::ios::binary);
  if (!in) FailInput("cannot read " + source);
  return ReadStream(in);
}

void WriteFile(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) FailInput("cannot write " + path);
}

struct Common {
  std::string format = "human";
  int max_n = 0;
  std::string seed;
};

bool IsRandomSpec(const std::string& spec) {
  return spec.rfind("random-", 0) == 0;
}

// A file if one exists at that path, otherwise a generator spec.
OwnedGraph LoadGraph(const std::string& input, const Common& common) {
  bmp_graph* g = nullptr;
  bmp_status status;
  if (input == "-" || std::filesystem::exists(input)) {
    const std::string text = ReadSource(input);
    status = bmp_graph_from_text(text.c_str(), &g);
  } else {
    std::string spec = input;
    if (!common.seed.empty() && IsRandomSpec(spec) &&
        spec.find("seed=") == std::string::npos) {
      spec += (spec.find(':') == std::string::npos ? ":" : ",");
      spec += "seed=" + common.seed;
    }
    status = bmp_graph_from_spec(spec.c_str(), &g);
    if (status == BMP_INVALID_PARAMS) {
      FailInput("\"" + input + "\" is neither a file nor a generator spec (" +
                bmp_last_error() + ")");
    }
  }
  Check(status);
  return OwnedGraph(g);
}

std::string Join(const json& values, const char* sep = " ") {
  std::string out;
  for (const json& v : values) {
    if (!out.empty()) out += sep;
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

void PrintStats(const json& j) {
  std::cout << "n          " << j["n"] << "\n"
            << "m          " << j["m"] << "\n"
            << "radius     " << j["radius"] << "\n"
            << "diameter   " << j["diameter"] << "\n"
            << "center     " << Join(j["center"]) << "\n"
            << "chordal    " << (j["chordal"].get<bool>() ? "yes" : "no");
  if (j.contains("chordless_cycle")) {
    std::cout << " (chordless cycle " << Join(j["chordless_cycle"]) << ")";
  }
  std::cout << "\n"
            << "delta      " << j["delta"].get<std::string>() << "\n";
}

void PrintTrace(const json& j) {
  std::cout << "nodes      " << j["nodes"] << "\n";
  std::string trace;
  for (const json& step : j["lower_bound_trace"]) {
    trace += (trace.empty() ? "" : " ") + std::string("[") +
             step[0].dump() + "," + step[1].dump() + "]";
  }
  std::cout << "bounds     " << trace << "\n";
}

void PrintBounds(const json& j) {
  std::cout << "mode       " << j["mode"].get<std::string>() << "\n";
  if (j.contains("size_limit_exceeded")) {
    std::cout << "           (" << j["size_limit_exceeded"].get<std::string>()
              << ")\n";
  }
  std::cout << "n          " << j["n"] << "\n"
            << "radius     " << j["radius"] << "\n"
            << "diameter   " << j["diameter"] << "\n"
            << "chordal    " << (j["chordal"].get<bool>() ? "yes" : "no")
            << "\n"
            << "delta      " << j["delta"].get<std::string>()
            << (j["delta_exact"].get<bool>() ? "" : " (supplied)") << "\n"
            << "MP_f       " << j["mp_f"].get<std::string>() << "\n";
  auto value = [&](const char* key, const char* bounds) {
    if (!j[key].is_null()) return j[key].dump();
    return "[" + j[bounds][0].dump() + ", " + j[bounds][1].dump() + "]";
  };
  std::cout << "MP         " << value("mp", "mp_bounds") << "\n"
            << "gamma_b    " << value("gamma_b", "gamma_b_bounds") << "\n\n";
  for (const json& c : j["checks"]) {
    const char* verdict = !c["applicable"].get<bool>() ? "n/a "
                          : c["holds"].get<bool>()     ? "ok  "
                                                       : "FAIL";
    std::cout << verdict << "  " << c["name"].get<std::string>() << "   ("
              << c["lhs"].get<std::string>() << " vs "
              << c["rhs"].get<std::string>() << ")\n";
  }
}

void PrintSolve(const json& j) {
  const std::string problem = j["problem"];
  if (problem == "mp") {
    std::cout << "MP         " << j["optimum"] << "\n"
              << "witness    " << Join(j["witness"]) << "\n";
    PrintTrace(j);
  } else if (problem == "gamma-b") {
    std::string towers;
    for (const json& t : j["witness"]) {
      towers += (towers.empty() ? "" : " ") + t["vertex"].dump() + ":" +
                t["radius"].dump();
    }
    std::cout << "gamma_b    " << j["optimum"] << "\n"
              << "witness    " << towers
              << (j["efficient"].get<bool>() ? " (efficient)" : "") << "\n";
    PrintTrace(j);
  } else if (problem == "fractional") {
    std::string weights;
    for (const json& w : j["witness"]) {
      weights += (weights.empty() ? "" : " ") + w["vertex"].dump() + ":" +
                 w["weight"].get<std::string>();
    }
    std::cout << "MP_f       " << j["mp_f"].get<std::string>() << "\n"
              << "gamma_b_f  " << j["gamma_b_f"].get<std::string>() << "\n"
              << "witness    " << weights << "\n"
              << "pivots     " << j["pivots"] << "\n";
  } else if (problem == "approx") {
    std::cout << "size       " << j["size"] << "\n"
              << "multipacking " << Join(j["multipacking"]) << "\n"
              << "path       " << Join(j["path"]) << "\n";
    for (const char* kind : {"chordal", "hyperbolic"}) {
      if (!j.contains(kind)) continue;
      const json& g = j[kind];
      std::cout << kind << ": ceil((d+1)/3) = " << g["approx_size"]
                << " >= " << g["radius_guarantee"] << " from r = "
                << g["radius"] << ", d = " << g["diameter"];
      if (std::string(kind) == "hyperbolic") {
        std::cout << ", delta = " << g["delta"].get<std::string>();
      }
      std::cout << (g["chain_holds"].get<bool>() ? "" : "  FAILS") << "\n";
    }
  } else {
    PrintBounds(j);
  }
}

void PrintCheck(const json& j) {
  const std::string kind = j["kind"];
  if (kind == "multipacking") {
    if (j["valid"].get<bool>()) {
      std::cout << "valid multipacking of size " << j["size"] << "\n";
    } else {
      const json& v = j["violation"];
      std::cout << "invalid: N_" << v["radius"] << "[" << v["center"]
                << "] holds " << Join(v["members_in_ball"]) << "\n";
    }
  } else if (kind == "broadcast") {
    std::cout << (j["dominating"].get<bool>() ? "dominating" : "not dominating")
              << ", " << (j["efficient"].get<bool>() ? "efficient" : "not efficient")
              << ", cost " << j["cost"] << "\n";
    if (!j["uncovered"].empty()) {
      std::cout << "uncovered  " << Join(j["uncovered"]) << "\n";
    }
    if (!j["overheard"].empty()) {
      std::cout << "overheard  " << Join(j["overheard"]) << "\n";
    }
  } else {
    std::cout << (j["valid"].get<bool>() ? "valid" : "invalid")
              << " fractional multipacking, total "
              << j["total"].get<std::string>() << "\n";
    if (j.contains("violation")) {
      const json& v = j["violation"];
      std::cout << "violation  w(N_" << v["radius"] << "[" << v["center"]
                << "]) = " << v["ball_weight"].get<std::string>() << "\n";
    }
  }
}

void PrintVerify(const json& j) {
  std::string group;
  for (const json& r : j["rows"]) {
    if (r["group"] != group) {
      group = r["group"];
      std::cout << "\n" << group << "\n";
    }
    std::cout << (r["passed"].get<bool>() ? "  PASS  " : "  FAIL  ")
              << r["name"].get<std::string>() << "\n"
              << "        expected " << r["expected"].get<std::string>()
              << "\n"
              << "        computed " << r["computed"].get<std::string>()
              << "\n";
  }
  std::cout << "\n"
            << (j["total"].get<int>() - j["failed"].get<int>()) << "/"
            << j["total"] << " rows pass\n";
}

void Emit(const Common& common, const json& j, void (*human)(const json&)) {
  if (common.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    human(j);
  }
}

int DefaultMaxN() {
  if (const char* env = std::getenv("BMP_MAX_N")) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(env, &used);
      if (used == std::strlen(env) && value > 0) return value;
    } catch (const std::exception&) {
    }
    FailInput(std::string("BMP_MAX_N must be a positive integer, got \"") +
              env + "\"");
  }
  bmp_solve_options defaults;
  bmp_solve_options_init(&defaults);
  return defaults.max_vertices;
}

int Run(int argc, char** argv) {
  CLI::App app{"Broadcast domination and multipacking numbers of graphs", "bmp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bmp_version()));

  Common common;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();
    cmd->add_option("--max-n", common.max_n,
                    "Size guard of the exact solvers (default $BMP_MAX_N or 64)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", common.seed,
                    "Seed for random-* specs that do not name one");
  };

  std::string input;

  CLI::App* stats = app.add_subcommand("stats", "Radius, diameter, center, "
                                                "chordality and hyperbolicity");
  stats->add_option("input", input, "Edge-list file, - or generator spec")
      ->required();
  add_common(stats);

  std::string problem, delta, witness_out, dump_lp;
  bool efficient = false;
  CLI::App* solve = app.add_subcommand("solve", "Solve or bound MP and gamma_b");
  solve->add_option("problem", problem, "mp, gamma-b, fractional, approx or bounds")
      ->required()
      ->check(CLI::IsMember({"mp", "gamma-b", "fractional", "approx", "bounds"}));
  solve->add_option("input", input, "Edge-list file, - or generator spec")
      ->required();
  solve->add_option("--delta", delta,
                    "Known upper bound on the hyperbolicity, e.g. 1 or 1/2");
  solve->add_flag("--efficient", efficient,
                  "gamma-b: search efficient broadcasts only");
  solve->add_option("--witness-out", witness_out,
                    "Write the witness in certificate format (- for stdout)");
  solve->add_option("--dump-lp", dump_lp,
                    "Write the covering system as sparse text (- for stdout)");
  add_common(solve);

  std::string kind, certificate;
  CLI::App* check = app.add_subcommand("check", "Verify a certificate");
  check->add_option("kind", kind, "multipacking, broadcast or fractional")
      ->required()
      ->check(CLI::IsMember({"multipacking", "broadcast", "fractional"}));
  check->add_option("input", input, "Edge-list file, - or generator spec")
      ->required();
  check->add_option("certificate", certificate, "Certificate file or -")
      ->required();
  add_common(check);

  std::string output, label_map;
  CLI::App* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen->add_option("spec", input, "Generator spec, e.g. gk:2 or petersen")
      ->required();
  gen->add_option("-o,--output", output, "Output file (default stdout)");
  gen->add_option("--label-map", label_map,
                  "Write \"vertex label\" lines for labelled graphs");
  gen->add_option("--seed", common.seed,
                  "Seed for random-* specs that do not name one");

  bool quick = false, no_g2 = false;
  CLI::App* verify = app.add_subcommand(
      "verify-paper", "Reproduce every quantitative claim, row by row");
  verify->add_flag("--quick", quick, "Run the fuzz batches at a tenth of their size");
  verify->add_flag("--no-g2", no_g2, "Skip the exact solves on G_2");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  bmp_solve_options options;
  bmp_solve_options_init(&options);
  options.max_vertices = common.max_n > 0 ? common.max_n : DefaultMaxN();

  if (*stats) {
    OwnedGraph g = LoadGraph(input, common);
    char* out = nullptr;
    Check(bmp_stats_json(g.get(), &out));
    Emit(common, json::parse(Take(out)), PrintStats);
    return kExitOk;
  }

  if (*solve) {
    OwnedGraph g = LoadGraph(input, common);
    if (!delta.empty()) options.delta = delta.c_str();
    options.efficient_only = efficient ? 1 : 0;
    if (!dump_lp.empty()) {
      char* text = nullptr;
      Check(bmp_dump_lp(g.get(), 0, &text));
      WriteFile(dump_lp, Take(text));
    }
    const bmp_problem which = problem == "mp"           ? BMP_PROBLEM_MP
                              : problem == "gamma-b"    ? BMP_PROBLEM_GAMMA_B
                              : problem == "fractional" ? BMP_PROBLEM_FRACTIONAL
                              : problem == "approx"     ? BMP_PROBLEM_APPROX
                                                        : BMP_PROBLEM_BOUNDS;
    char* out = nullptr;
    char* witness = nullptr;
    const bmp_status status =
        bmp_solve_json(g.get(), which, &options, &out, &witness);
    const std::string report = Take(out);
    const std::string witness_text = Take(witness);
    if (status == BMP_SIZE_LIMIT_EXCEEDED && !report.empty()) {
      std::cerr << "bmp: " << bmp_last_error() << "; bounds only\n";
      Emit(common, json::parse(report), PrintSolve);
      return kExitSizeGuard;
    }
    Check(status);
    if (!witness_out.empty()) WriteFile(witness_out, witness_text);
    const json j = json::parse(report);
    Emit(common, j, PrintSolve);
    if (which == BMP_PROBLEM_BOUNDS && !j["all_hold"].get<bool>()) {
      return kExitInvalid;
    }
    return kExitOk;
  }

  if (*check) {
    if (input == "-" && certificate == "-") {
      FailInput("graph and certificate cannot both come from stdin");
    }
    OwnedGraph g = LoadGraph(input, common);
    const std::string cert = ReadSource(certificate);
    const bmp_certificate_kind which =
        kind == "multipacking" ? BMP_CERT_MULTIPACKING
        : kind == "broadcast"  ? BMP_CERT_BROADCAST
                               : BMP_CERT_FRACTIONAL;
    char* out = nullptr;
    int valid = 0;
    Check(bmp_check_json(g.get(), which, cert.c_str(), &out, &valid));
    Emit(common, json::parse(Take(out)), PrintCheck);
    return valid ? kExitOk : kExitInvalid;
  }

  if (*gen) {
    OwnedGraph g = LoadGraph(input, common);
    char* text = nullptr;
    Check(bmp_graph_to_text(g.get(), &text));
    const std::string edges = Take(text);
    if (output.empty() || output == "-") {
      std::cout << edges;
    } else {
      WriteFile(output, edges);
    }
    if (!label_map.empty()) {
      char* labels = nullptr;
      Check(bmp_graph_label_map(g.get(), &labels));
      WriteFile(label_map, Take(labels));
    }
    return kExitOk;
  }

  bmp_verify_options verify_options;
  bmp_verify_options_init(&verify_options);
  if (!common.seed.empty()) {
    try {
      verify_options.seed = std::stoull(common.seed);
    } catch (const std::exception&) {
      FailInput("--seed must be a nonnegative integer");
    }
  }
  if (quick) verify_options.fuzz_scale_percent = 10;
  if (no_g2) verify_options.include_g2 = 0;
  char* out = nullptr;
  int passed = 0;
  Check(bmp_verify_paper_json(&verify_options, &out, &passed));
  Emit(common, json::parse(Take(out)), PrintVerify);
  return passed ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const ExitRequest& e) {
    return e.code;
  } catch (const json::exception& e) {
    std::cerr << "bmp: malformed report: " << e.what() << "\n";
    return kExitInvalid;
  }
}
