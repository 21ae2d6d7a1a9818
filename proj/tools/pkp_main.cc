// Copyright 2026 The pkp Authors
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

// pkp: command-line front end of libpkp. Talks to the library only through
// the C interface in pkp/pkp.h.
//
// Exit codes: 0 success, 1 input or usage error, 2 empty result (solve) or a
// failed check (verify-ppp).

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pkp/pkp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitEmpty = 2;
constexpr std::size_t kBenchMaxItems = 40;

struct CliError {
  std::string message;
};

void Check(pkp_status status, const std::string& context) {
  if (status != PKP_OK) {
    throw CliError{context + ": " + pkp_status_name(status) + ": " +
                   pkp_last_error()};
  }
}

struct InstanceDeleter {
  void operator()(pkp_instance* p) const { pkp_instance_destroy(p); }
};
struct SolutionDeleter {
  void operator()(pkp_solution* p) const { pkp_solution_destroy(p); }
};
using InstancePtr = std::unique_ptr<pkp_instance, InstanceDeleter>;
using SolutionPtr = std::unique_ptr<pkp_solution, SolutionDeleter>;

// Takes ownership of a library-allocated string.
std::string Take(char* s) {
  std::string out = s == nullptr ? "" : s;
  pkp_string_free(s);
  return out;
}

InstancePtr ReadInstance(const std::string& path) {
  pkp_instance* raw = nullptr;
  Check(pkp_instance_read_file(path.c_str(), &raw), "reading " + path);
  return InstancePtr(raw);
}

std::string ToJson(const pkp_instance* instance) {
  char* s = nullptr;
  Check(pkp_instance_to_json(instance, &s), "serializing instance");
  return Take(s);
}

std::string ToText(const pkp_instance* instance) {
  char* s = nullptr;
  Check(pkp_instance_to_text(instance, &s), "serializing instance");
  return Take(s);
}

void WriteOutput(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{"cannot write '" + path + "'"};
  out << content;
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// FNV-1a over the canonical JSON encoding.
std::string Digest(const pkp_instance* instance) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : ToJson(instance)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016" PRIx64, h);
  return buf;
}

pkp_algorithm ParseAlgo(const std::string& name) {
  if (name == "exact") return PKP_ALGO_EXACT;
  if (name == "fptas") return PKP_ALGO_FPTAS;
  if (name == "greedy") return PKP_ALGO_GREEDY;
  if (name == "brute") return PKP_ALGO_BRUTE;
  throw CliError{"unknown algorithm '" + name + "'"};
}

std::vector<std::size_t> SolutionIndices(const pkp_solution* s) {
  std::vector<std::size_t> out(pkp_solution_size(s));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = pkp_solution_index(s, k);
  return out;
}

std::vector<std::size_t> ForcedIndices(const pkp_solution* s) {
  std::vector<std::size_t> out(pkp_solution_forced_size(s));
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = pkp_solution_forced_index(s, k);
  }
  return out;
}

std::string SolutionValue(const pkp_solution* s) {
  char* v = nullptr;
  Check(pkp_solution_value(s, &v), "reading solution value");
  return Take(v);
}

std::string Ratio(const std::string& value, const std::string& reference) {
  if (reference == "0") return value == "0" ? "1/1" : "inf";
  char* r = nullptr;
  Check(pkp_ratio(value.c_str(), reference.c_str(), &r), "computing ratio");
  return Take(r);
}

std::string CanonicalEps(const std::string& eps) {
  char* s = nullptr;
  Check(pkp_rational_canonical(eps.c_str(), &s), "parsing eps");
  return Take(s);
}

struct Timed {
  SolutionPtr solution;
  double millis = 0.0;
};

Timed RunSolver(const pkp_instance* instance, pkp_algorithm algo,
                const char* eps) {
  pkp_solution* raw = nullptr;
  const auto start = std::chrono::steady_clock::now();
  Check(pkp_solve(instance, algo, eps, &raw), "solving");
  const auto stop = std::chrono::steady_clock::now();
  return {SolutionPtr(raw),
          std::chrono::duration<double, std::milli>(stop - start).count()};
}

// ---- solve ---------------------------------------------------------------

struct SolveOptions {
  std::string file;
  std::string algo = "exact";
  std::string eps;
  std::optional<std::uint64_t> seed;
  std::string reference;
  bool trace = false;
  std::string format = "json";
};

int CmdSolve(const SolveOptions& opt) {
  const pkp_algorithm algo = ParseAlgo(opt.algo);
  if (algo == PKP_ALGO_FPTAS && opt.eps.empty()) {
    throw CliError{"--algo fptas requires --eps"};
  }
  if (algo != PKP_ALGO_FPTAS && !opt.eps.empty()) {
    throw CliError{"--eps is only meaningful with --algo fptas"};
  }
  if (opt.trace && algo != PKP_ALGO_GREEDY) {
    throw CliError{"--trace is only available with --algo greedy"};
  }
  InstancePtr instance = ReadInstance(opt.file);
  Timed run = RunSolver(instance.get(), algo,
                        opt.eps.empty() ? nullptr : opt.eps.c_str());
  const pkp_solution* solution = run.solution.get();

  const std::vector<std::size_t> indices = SolutionIndices(solution);
  const std::string value = SolutionValue(solution);
  // Re-validate before emitting anything.
  char* check_value = nullptr;
  Check(pkp_evaluate(instance.get(), indices.data(), indices.size(),
                     &check_value),
        "re-evaluating solution");
  int feasible = 0;
  Check(pkp_is_feasible(instance.get(), indices.data(), indices.size(),
                        &feasible),
        "re-checking feasibility");
  if (Take(check_value) != value || !feasible) {
    throw CliError{"internal error: solution failed re-validation"};
  }

  nlohmann::ordered_json report;
  report["algorithm"] = opt.algo;
  report["instance_digest"] = Digest(instance.get());
  report["value"] = value;
  report["indices"] = indices;
  report["forced_items"] = ForcedIndices(solution);
  report["wall_time_ms"] = run.millis;
  nlohmann::ordered_json params;
  params["eps"] = opt.eps.empty() ? nlohmann::ordered_json(nullptr)
                                  : nlohmann::ordered_json(CanonicalEps(opt.eps));
  params["seed"] = opt.seed ? nlohmann::ordered_json(*opt.seed)
                            : nlohmann::ordered_json(nullptr);
  report["parameters"] = params;
  if (!opt.reference.empty()) {
    report["ratio"] = Ratio(value, opt.reference);
  }
  if (opt.trace) {
    char* t = nullptr;
    Check(pkp_solution_trace_json(solution, &t), "reading greedy trace");
    report["trace"] = nlohmann::ordered_json::parse(Take(t));
  }

  if (opt.format == "text") {
    std::cout << "algorithm: " << opt.algo << "\nvalue: " << value
              << "\nindices:";
    for (std::size_t j : indices) std::cout << ' ' << j;
    std::cout << "\n";
  } else {
    std::cout << report.dump() << "\n";
  }
  return value == "0" ? kExitEmpty : kExitOk;
}

// ---- gen -----------------------------------------------------------------

struct GenOptions {
  std::string kind;
  std::int64_t m = 10;
  pkp_random_params random{0, 1, 9, 0, 15, 30, 0.5, 0};
  std::string out;
  std::string format = "json";
};

int CmdGen(const GenOptions& opt) {
  pkp_instance* raw = nullptr;
  if (opt.kind == "example1") {
    Check(pkp_gen_example1(opt.m, &raw), "generating example1");
  } else if (opt.kind == "random") {
    Check(pkp_gen_random(&opt.random, &raw), "generating random instance");
  } else {
    throw CliError{"unknown generator '" + opt.kind + "'"};
  }
  InstancePtr instance(raw);
  WriteOutput(opt.out, opt.format == "text" ? ToText(instance.get())
                                            : ToJson(instance.get()));
  return kExitOk;
}

// ---- bench ---------------------------------------------------------------

struct BenchOptions {
  std::string n_list = "4,6,8,10";
  std::string eps_list = "1/10";
  std::size_t seeds = 10;
  std::uint64_t first_seed = 0;
  pkp_random_params random{0, 1, 9, 1, 15, 30, 0.4, 0};
  std::string out;
};

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int CmdBench(const BenchOptions& opt) {
  std::vector<std::size_t> ns;
  for (const std::string& s : SplitList(opt.n_list)) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || s.empty()) throw CliError{"bad n '" + s + "'"};
    if (v > kBenchMaxItems) {
      throw CliError{"LimitExceeded: n = " + s + " is above the bench limit of " +
                     std::to_string(kBenchMaxItems)};
    }
    ns.push_back(static_cast<std::size_t>(v));
  }
  std::vector<std::string> eps_list;
  for (const std::string& e : SplitList(opt.eps_list)) {
    eps_list.push_back(CanonicalEps(e));
  }

  std::ostringstream csv;
  csv << "n,eps,seed,z_exact,z_fptas,z_greedy,ratio_fptas,ratio_greedy,"
         "t_exact_ms,t_fptas_ms\n";
  for (std::size_t n : ns) {
    for (std::size_t k = 0; k < opt.seeds; ++k) {
      pkp_random_params params = opt.random;
      params.n = n;
      params.seed = opt.first_seed + k;
      pkp_instance* raw = nullptr;
      Check(pkp_gen_random(&params, &raw), "generating bench instance");
      InstancePtr instance(raw);
      Timed exact = RunSolver(instance.get(), PKP_ALGO_EXACT, nullptr);
      Timed greedy = RunSolver(instance.get(), PKP_ALGO_GREEDY, nullptr);
      const std::string z_exact = SolutionValue(exact.solution.get());
      const std::string z_greedy = SolutionValue(greedy.solution.get());
      for (const std::string& eps : eps_list) {
        Timed fptas = RunSolver(instance.get(), PKP_ALGO_FPTAS, eps.c_str());
        const std::string z_fptas = SolutionValue(fptas.solution.get());
        csv << n << ',' << eps << ',' << params.seed << ',' << z_exact << ','
            << z_fptas << ',' << z_greedy << ',' << Ratio(z_fptas, z_exact)
            << ',' << Ratio(z_greedy, z_exact) << ',' << exact.millis << ','
            << fptas.millis << '\n';
      }
    }
  }
  WriteOutput(opt.out, csv.str());
  return kExitOk;
}

// ---- reduction -----------------------------------------------------------

std::vector<std::int64_t> ReadPpp(const std::string& path) {
  std::vector<std::int64_t> a;
  std::istringstream in(ReadText(path));
  std::string token;
  while (in >> token) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != token.size()) throw CliError{"not an integer: '" + token + "'"};
    a.push_back(v);
  }
  return a;
}

int CmdReducePpp(const std::string& file, const std::string& out) {
  const std::vector<std::int64_t> a = ReadPpp(file);
  pkp_instance* raw = nullptr;
  char* info = nullptr;
  Check(pkp_reduce_ppp(a.data(), a.size(), &raw, &info), "reducing");
  InstancePtr instance(raw);
  std::cerr << Take(info) << "\n";
  WriteOutput(out, ToJson(instance.get()));
  return kExitOk;
}

int CmdVerifyPpp(const std::string& file, std::size_t limit) {
  const std::vector<std::int64_t> a = ReadPpp(file);
  char* report = nullptr;
  int holds = 0;
  Check(pkp_verify_ppp(a.data(), a.size(), limit, &report, &holds),
        "verifying");
  std::cout << Take(report) << "\n";
  return holds ? kExitOk : kExitEmpty;
}

int CmdCheck(const std::string& file, const std::string& format) {
  InstancePtr instance = ReadInstance(file);
  char* report = nullptr;
  Check(pkp_check(instance.get(), &report), "checking");
  const std::string json = Take(report);
  if (format == "text") {
    const auto j = nlohmann::json::parse(json);
    std::cout << "removed: " << j["removed"].dump()
              << "\nforced: " << j["forced"].dump()
              << "\nkept: " << j["kept"].dump() << "\n";
  } else {
    std::cout << json << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Product knapsack solver"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("file", solve.file, "Instance (JSON or text)")
      ->required();
  solve_cmd->add_option("--algo", solve.algo, "exact | fptas | greedy | brute")
      ->check(CLI::IsMember({"exact", "fptas", "greedy", "brute"}));
  solve_cmd->add_option("--eps", solve.eps,
                        "Approximation parameter, e.g. 1/10 or 0.1");
  solve_cmd->add_option("--seed", solve.seed, "Recorded in the report");
  solve_cmd->add_option("--reference", solve.reference,
                        "Reference value for the reported ratio");
  solve_cmd->add_flag("--trace", solve.trace, "Include the greedy trace");
  solve_cmd->add_option("--format", solve.format)
      ->check(CLI::IsMember({"json", "text"}));

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("kind", gen.kind, "random | example1")
      ->required()
      ->check(CLI::IsMember({"random", "example1"}));
  gen_cmd->add_option("--M", gen.m, "Example 1 parameter (>= 3)");
  gen_cmd->add_option("--n", gen.random.n, "Number of items");
  gen_cmd->add_option("--seed", gen.random.seed);
  gen_cmd->add_option("--p-min", gen.random.profit_min);
  gen_cmd->add_option("--p-max", gen.random.profit_max);
  gen_cmd->add_option("--w-min", gen.random.weight_min);
  gen_cmd->add_option("--w-max", gen.random.weight_max);
  gen_cmd->add_option("--capacity", gen.random.capacity);
  gen_cmd->add_option("--neg-fraction", gen.random.neg_fraction);
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");
  gen_cmd->add_option("--format", gen.format)
      ->check(CLI::IsMember({"json", "text"}));

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Compare solvers, CSV output");
  bench_cmd->add_option("--n", bench.n_list, "Comma separated item counts");
  bench_cmd->add_option("--eps", bench.eps_list, "Comma separated eps values");
  bench_cmd->add_option("--seeds", bench.seeds, "Instances per n");
  bench_cmd->add_option("--seed", bench.first_seed, "First seed");
  bench_cmd->add_option("--p-max", bench.random.profit_max);
  bench_cmd->add_option("--w-max", bench.random.weight_max);
  bench_cmd->add_option("--capacity", bench.random.capacity);
  bench_cmd->add_option("--neg-fraction", bench.random.neg_fraction);
  bench_cmd->add_option("--out", bench.out, "Output CSV (default stdout)");

  std::string ppp_file;
  std::string reduce_out;
  auto* reduce_cmd =
      app.add_subcommand("reduce-ppp", "Product partition to knapsack");
  reduce_cmd->add_option("file", ppp_file, "Whitespace separated integers")
      ->required();
  reduce_cmd->add_option("--out", reduce_out, "Output file (default stdout)");

  std::size_t verify_limit = 10;
  auto* verify_cmd = app.add_subcommand(
      "verify-ppp", "Brute-force both sides of the reduction");
  verify_cmd->add_option("file", ppp_file, "Whitespace separated integers")
      ->required();
  verify_cmd->add_option("--limit", verify_limit, "Maximum number of entries");

  std::string check_file;
  std::string check_format = "json";
  auto* check_cmd =
      app.add_subcommand("check", "Report preprocessing removals");
  check_cmd->add_option("file", check_file)->required();
  check_cmd->add_option("--format", check_format)
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve_cmd) return CmdSolve(solve);
    if (*gen_cmd) return CmdGen(gen);
    if (*bench_cmd) return CmdBench(bench);
    if (*reduce_cmd) return CmdReducePpp(ppp_file, reduce_out);
    if (*verify_cmd) return CmdVerifyPpp(ppp_file, verify_limit);
    if (*check_cmd) return CmdCheck(check_file, check_format);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitError;
  }
  return kExitError;
}
