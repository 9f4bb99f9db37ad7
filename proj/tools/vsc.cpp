// Copyright 2026 The Authors.
//
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

// Command-line entry point. Machine-readable results go to stdout; logs and
// errors go to stderr.
//
// Exit codes: 0 success, 1 usage error, 2 validation error (or a failed
// verify), 3 oracle result unknown, 4 internal-consistency failure.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>

#include "CLI11.hpp"
#include "json.hpp"
#include "vsc/analysis.hpp"
#include "vsc/baseline.hpp"
#include "vsc/error.hpp"
#include "vsc/exact.hpp"
#include "vsc/generate.hpp"
#include "vsc/greedy.hpp"
#include "vsc/io.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kValidation = 2, kUnknown = 3, kInternal = 4 };

enum class LogLevel { kQuiet, kInfo, kDebug };

LogLevel LevelFromEnv() {
  const char* v = std::getenv("VSC_LOG");
  if (v == nullptr) return LogLevel::kInfo;
  const std::string_view s(v);
  if (s == "quiet") return LogLevel::kQuiet;
  if (s == "debug") return LogLevel::kDebug;
  return LogLevel::kInfo;
}

const LogLevel g_level = LevelFromEnv();

void Info(const std::string& msg) {
  if (g_level >= LogLevel::kInfo) std::cerr << "[info] " << msg << '\n';
}
void Debug(const std::string& msg) {
  if (g_level >= LogLevel::kDebug) std::cerr << "[debug] " << msg << '\n';
}

struct SeedRange {
  std::uint64_t first = 0;
  std::uint64_t last = 99;
};

SeedRange ParseSeedRange(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoull(text);
      return {v, v};
    }
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--corpus-seeds", "expected A..B, got '" + text + "'");
  }
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw vsc::Error(vsc::ErrorKind::kSyntax, path, path + ": cannot open for writing");
  out << contents;
}

struct Options {
  std::string instance_path;
  std::string solution_path;
  std::string trace_path;
  vsc::OracleLimits limits;

  std::string kind = "random";
  std::uint64_t seed = 0;
  bool corpus = false;
  vsc::RandomParams random;
  vsc::TracerouteParams traceroute;
  std::string graph = "er";
  vsc::DecoyParams decoy;
  std::size_t hub_blocks = 3;
  std::size_t hub_block_size = 2;

  std::string seeds = "0..99";
  unsigned jobs = 1;
  bool claim = false;
  vsc::CorpusBounds bounds;
  std::string summary_path;

  std::uint64_t taylor_max = 1'000'000;
};

void AddLimits(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-sets", o.limits.max_sets, "Oracle cap on the number of sets")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-nodes", o.limits.max_nodes, "Oracle cap on search nodes")
      ->check(CLI::PositiveNumber);
}

int RunSolve(const Options& o) {
  const vsc::Instance inst = vsc::load_instance_file(o.instance_path);
  vsc::GreedyConfig cfg;
  cfg.trace = !o.trace_path.empty();
  const vsc::GreedyResult result = vsc::greedy_solve(inst, cfg);
  if (result.trace) WriteFile(o.trace_path, vsc::trace_to_jsonl(*result.trace));
  Info("greedy: rounds=" + std::to_string(result.solution.rounds) +
       " objective=" + std::to_string(result.solution.objective));
  std::cout << vsc::save_solution(result.solution);
  return kOk;
}

int RunExact(const Options& o) {
  const vsc::Instance inst = vsc::load_instance_file(o.instance_path);
  const vsc::ExactResult r = vsc::exact_solve(inst, o.limits);
  Debug("exact: nodes=" + std::to_string(r.nodes));
  if (!r.known()) {
    std::cerr << "unknown: " << r.reason << '\n';
    return kUnknown;
  }
  std::cout << nlohmann::json{{"opt", r.opt}, {"witness", r.witness}}.dump() << '\n';
  return kOk;
}

int RunBaseline(const Options& o) {
  const vsc::Instance inst = vsc::load_instance_file(o.instance_path);
  const auto cover = vsc::classic_greedy(inst);
  vsc::ImbalanceReport report = vsc::imbalance_report(inst, cover);
  const vsc::ExactResult exact = vsc::exact_solve(inst, o.limits);
  if (exact.known()) report.opt = exact.opt;
  else Info("oracle: " + exact.reason);
  nlohmann::json j = {{"baseline_objective", report.baseline_objective},
                      {"vsc_objective", report.vsc_objective},
                      {"vsc_rounds", report.vsc_rounds},
                      {"opt", nullptr}};
  if (report.opt) j["opt"] = *report.opt;
  std::cout << j.dump() << '\n';
  return kOk;
}

int RunGen(Options o) {
  if (o.kind == "hub") {
    std::cout << vsc::save_instance(vsc::hub_instance(o.hub_blocks, o.hub_block_size));
    return kOk;
  }
  vsc::GenSpec spec;
  const vsc::GenKind kind = vsc::parse_gen_kind(o.kind);
  if (o.corpus) {
    spec = vsc::corpus_spec(kind, o.seed, o.bounds);
  } else {
    spec.kind = kind;
    spec.seed = o.seed;
    o.traceroute.model = vsc::parse_graph_model(o.graph);
    spec.random = o.random;
    spec.traceroute = o.traceroute;
    spec.decoy = o.decoy;
  }
  std::cout << vsc::save_instance(vsc::generate(spec));
  return kOk;
}

int RunVerify(const Options& o) {
  const vsc::Instance inst = vsc::load_instance_file(o.instance_path);
  const vsc::Solution sol = vsc::load_solution_file(o.solution_path);
  const vsc::VerificationReport report = vsc::verify_solution(inst, sol);
  std::cout << vsc::report_to_json(report).dump() << '\n';
  for (const auto& f : report.failures) Info("verify: " + f.check + ": " + f.detail);
  return report.ok() ? kOk : kValidation;
}

int RunBench(const Options& o) {
  vsc::BenchOptions b;
  b.kind = vsc::parse_gen_kind(o.kind);
  const SeedRange range = ParseSeedRange(o.seeds);
  b.first_seed = range.first;
  b.last_seed = range.last;
  b.bounds = o.bounds;
  b.limits = o.limits;
  b.claim = o.claim;
  b.jobs = o.jobs;
  const auto records = vsc::run_bench(b);
  std::cout << vsc::to_csv(records);

  const vsc::BenchSummary summary = vsc::summarize(records);
  std::size_t unknown = 0;
  for (const auto& r : records) {
    if (!r.opt) ++unknown;
    for (const auto& v : r.hard_violations) Info("seed " + std::to_string(r.seed) + ": HARD " + v);
    for (const auto& f : r.findings) Debug("seed " + std::to_string(r.seed) + ": finding " + f);
  }
  if (unknown > 0) Info(std::to_string(unknown) + " instances with unknown opt");
  const std::string json = vsc::summary_to_json(summary).dump() + "\n";
  if (o.summary_path.empty()) {
    std::cerr << json;
  } else {
    WriteFile(o.summary_path, json);
  }
  return summary.hard_violations == 0 ? kOk : kInternal;
}

int RunCheckTaylor(const Options& o) {
  const bool ok = vsc::taylor_inequality_check(o.taylor_max);
  std::cout << (ok ? "true" : "false") << '\n';
  return ok ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Validation set cover: round greedy, exact oracle and diagnostics"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Run the round greedy; prints a solution");
  solve->add_option("instance", o.instance_path, "Instance JSON")->required();
  solve->add_option("--trace", o.trace_path, "Write the per-round trace as JSON lines");

  auto* exact = app.add_subcommand("exact", "Exact optimum for small instances");
  exact->add_option("instance", o.instance_path, "Instance JSON")->required();
  AddLimits(exact, o);

  auto* baseline = app.add_subcommand("baseline", "Ownership-blind greedy vs round greedy");
  baseline->add_option("instance", o.instance_path, "Instance JSON")->required();
  AddLimits(baseline, o);

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--kind", o.kind, "random | traceroute | decoy | hub")
      ->check(CLI::IsMember({"random", "traceroute", "decoy", "hub"}));
  gen->add_option("--seed", o.seed, "RNG seed");
  gen->add_flag("--corpus", o.corpus, "Derive all parameters from the seed (bench corpus)");
  gen->add_option("--n", o.random.n, "random: universe size before compaction");
  gen->add_option("--k", o.random.k, "random: number of sets");
  gen->add_option("--m", o.random.m, "random: number of agents");
  gen->add_option("--size-min", o.random.size_min, "random: smallest set size");
  gen->add_option("--size-max", o.random.size_max, "random: largest set size");
  gen->add_option("--weight-min", o.random.weight_min, "smallest agent weight");
  gen->add_option("--weight-max", o.random.weight_max, "largest agent weight");
  gen->add_option("--nodes", o.traceroute.nodes, "traceroute: graph nodes");
  gen->add_option("--graph", o.graph, "traceroute: er | ba")->check(CLI::IsMember({"er", "ba"}));
  gen->add_option("--p", o.traceroute.edge_probability, "traceroute: edge probability (er)");
  gen->add_option("--attach", o.traceroute.attachment, "traceroute: edges per new node (ba)");
  gen->add_option("--agents", o.traceroute.m, "traceroute: number of agents");
  gen->add_option("--destinations", o.traceroute.destinations, "traceroute: destinations per agent");
  gen->add_option("--gadgets", o.decoy.gadgets, "decoy: number of gadgets");
  gen->add_option("--blocks", o.hub_blocks, "hub: number of blocks (= agents)");
  gen->add_option("--block-size", o.hub_block_size, "hub: elements per block");
  gen->parse_complete_callback([&] {
    o.traceroute.weight_min = o.random.weight_min;
    o.traceroute.weight_max = o.random.weight_max;
  });

  auto* verify = app.add_subcommand("verify", "Check a solution against an instance");
  verify->add_option("instance", o.instance_path, "Instance JSON")->required();
  verify->add_option("solution", o.solution_path, "Solution JSON")->required();

  auto* bench = app.add_subcommand("bench", "Greedy vs oracle over a seeded corpus");
  bench->add_option("--corpus-seeds", o.seeds, "Inclusive seed range A..B");
  bench->add_option("--kind", o.kind, "random | traceroute | decoy")
      ->check(CLI::IsMember({"random", "traceroute", "decoy"}));
  bench->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_flag("--claim", o.claim, "Also evaluate the per-round claim (residual oracles)");
  bench->add_flag("--unit", o.bounds.unit, "One agent with weight 1 (plain set cover)");
  bench->add_option("--n-max", o.bounds.n_max, "Largest universe before compaction");
  bench->add_option("--k-max", o.bounds.k_max, "Largest number of sets");
  bench->add_option("--m-max", o.bounds.m_max, "Largest number of agents");
  bench->add_option("--weight-max", o.bounds.weight_max, "Largest agent weight");
  bench->add_option("--summary", o.summary_path, "Write the JSON summary here (default stderr)");
  AddLimits(bench, o);

  auto* taylor = app.add_subcommand("check-taylor", "Check 1 + 1/(x-1) >= e^(1/x) for x in [2, max]");
  taylor->add_option("--max", o.taylor_max, "Largest x")->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return RunSolve(o);
    if (*exact) return RunExact(o);
    if (*baseline) return RunBaseline(o);
    if (*gen) return RunGen(o);
    if (*verify) return RunVerify(o);
    if (*bench) return RunBench(o);
    if (*taylor) return RunCheckTaylor(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const vsc::Error& e) {
    std::cerr << "error (" << vsc::to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == vsc::ErrorKind::kInternal ? kInternal : kValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
