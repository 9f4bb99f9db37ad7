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

#include "vsc/analysis.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "vsc/error.hpp"

namespace vsc {

double ln_bound(std::size_t n, std::size_t opt) {
  return 1.0 + std::log(static_cast<double>(n)) * static_cast<double>(opt);
}

double safe_bound(std::size_t n, std::size_t opt) {
  return 1.0 + 2.0 * std::log(static_cast<double>(n)) * static_cast<double>(opt);
}

bool within_bound(std::size_t rounds, double bound) {
  return static_cast<double>(rounds) <= bound + kBoundSlack;
}

bool LemmaReport::all_ok() const {
  for (const auto& r : rounds)
    if (!r.ok) return false;
  return true;
}

bool ClaimReport::all_ok() const {
  for (const auto& r : rounds)
    if (r.ok && !*r.ok) return false;
  return true;
}

bool ClaimReport::all_half_ok() const {
  for (const auto& r : rounds)
    if (r.half_ok && !*r.half_ok) return false;
  return true;
}

bool ClaimReport::residual_opts_bounded() const {
  if (!opt) return true;
  for (const auto& r : rounds)
    if (r.previous_opt && *r.previous_opt > *opt) return false;
  return true;
}

LemmaReport lemma_check(const ResidualTrace& trace, std::size_t opt) {
  LemmaReport report;
  report.opt = opt;
  if (opt == 0) return report;  // empty universe, no rounds
  const double shrink = 1.0 - 1.0 / static_cast<double>(opt);
  for (std::size_t l = 1; l < trace.records.size(); ++l) {
    LemmaRound r;
    r.round = l;
    r.uncovered = trace.records[l].uncovered;
    // opt == 1 collapses the bound to 0: the first round must finish the cover.
    r.bound = static_cast<double>(trace.n) * std::pow(shrink, static_cast<double>(l));
    r.ok = static_cast<double>(r.uncovered) <= r.bound + kBoundSlack;
    report.rounds.push_back(r);
  }
  return report;
}

LemmaReport lemma_check(const Instance& inst, const OracleLimits& limits) {
  const ExactResult exact = exact_solve(inst, limits);
  if (!exact.known()) return {};
  GreedyConfig cfg;
  cfg.trace = true;
  return lemma_check(*greedy_solve(inst, cfg).trace, exact.opt);
}

namespace {

ClaimReport Claim(const Instance& inst, const ResidualTrace& trace, const ExactResult& exact,
                  const OracleLimits& limits) {
  ClaimReport report;
  if (exact.known()) report.opt = exact.opt;
  for (std::size_t l = 1; l < trace.records.size(); ++l) {
    ClaimRound r;
    r.round = l;
    r.previous_uncovered = trace.records[l - 1].uncovered;
    r.gained = trace.records[l].gained;
    if (l == 1) {
      if (exact.known()) r.previous_opt = exact.opt;
    } else {
      const ExactResult residual = residual_opt(inst, trace, l - 1, limits);
      if (residual.known()) r.previous_opt = residual.opt;
    }
    if (r.previous_opt) {
      const std::size_t o = *r.previous_opt;
      r.ok = r.gained * o >= r.previous_uncovered;
      r.half_ok = 2 * r.gained * o >= r.previous_uncovered;
    }
    report.rounds.push_back(r);
  }
  return report;
}

ResidualTrace Trace(const Instance& inst, Solution* solution) {
  GreedyConfig cfg;
  cfg.trace = true;
  GreedyResult g = greedy_solve(inst, cfg);
  if (solution != nullptr) *solution = std::move(g.solution);
  return std::move(*g.trace);
}

}  // namespace

ClaimReport claim_check(const Instance& inst, const OracleLimits& limits) {
  const ExactResult exact = exact_solve(inst, limits);
  return Claim(inst, Trace(inst, nullptr), exact, limits);
}

RatioRecord diagnose(const Instance& inst, std::uint64_t seed, const OracleLimits& limits,
                     bool claim) {
  RatioRecord rec;
  rec.seed = seed;
  rec.n = inst.n;
  rec.k = inst.k();
  rec.m = inst.m();

  Solution sol;
  const ResidualTrace trace = Trace(inst, &sol);
  rec.rounds = sol.rounds;
  rec.objective = sol.objective;
  const VerificationReport verified = verify_solution(inst, sol);
  for (const auto& f : verified.failures)
    rec.hard_violations.push_back("greedy solution fails " + f.check + ": " + f.detail);

  const ExactResult exact = exact_solve(inst, limits);
  if (!exact.known()) return rec;
  const std::size_t opt = exact.opt;
  rec.opt = opt;
  rec.ln_bound = ln_bound(inst.n, opt);
  rec.safe_bound = safe_bound(inst.n, opt);

  if (rec.objective > rec.rounds)
    rec.hard_violations.push_back("objective " + std::to_string(rec.objective) +
                                  " exceeds rounds " + std::to_string(rec.rounds));
  if (rec.objective < opt)
    rec.hard_violations.push_back("objective " + std::to_string(rec.objective) +
                                  " below opt " + std::to_string(opt));
  if (inst.n > 0 && !within_bound(rec.rounds, rec.safe_bound))
    rec.hard_violations.push_back("rounds " + std::to_string(rec.rounds) +
                                  " exceed 1 + 2 ln(n) opt");
  if (inst.n > 0 && !within_bound(rec.rounds, rec.ln_bound))
    rec.findings.push_back("rounds " + std::to_string(rec.rounds) + " exceed 1 + ln(n) opt");

  const LemmaReport lemma = lemma_check(trace, opt);
  rec.lemma_ok = lemma.all_ok();
  for (const auto& r : lemma.rounds)
    if (!r.ok)
      rec.findings.push_back("lemma fails at round " + std::to_string(r.round) + ": n_l=" +
                             std::to_string(r.uncovered) + " > " + std::to_string(r.bound));

  if (claim) {
    const ClaimReport c = Claim(inst, trace, exact, limits);
    bool evaluated = true;
    for (const auto& r : c.rounds) {
      if (!r.ok) {
        evaluated = false;
        continue;
      }
      if (!*r.ok)
        rec.findings.push_back("claim fails at round " + std::to_string(r.round) + ": gained " +
                               std::to_string(r.gained) + " < " +
                               std::to_string(r.previous_uncovered) + "/" +
                               std::to_string(*r.previous_opt));
    }
    if (evaluated) rec.claim_ok = c.all_ok();
    if (!c.residual_opts_bounded())
      rec.hard_violations.push_back("a residual optimum exceeds opt");
  }
  return rec;
}

RatioRecord theorem_check(const Instance& inst, const OracleLimits& limits) {
  return diagnose(inst, 0, limits, false);
}

bool taylor_inequality_check(std::uint64_t x_max) {
  constexpr double kGuard = 1e-12;
  for (std::uint64_t x = 2; x <= x_max; ++x) {
    const double xd = static_cast<double>(x);
    const double lhs = 1.0 / (xd - 1.0);     // (1 + 1/(x-1)) - 1
    const double rhs = std::expm1(1.0 / xd);  // e^{1/x} - 1
    if (lhs < rhs * (1.0 - kGuard)) return false;
  }
  return true;
}

std::vector<RatioRecord> run_bench(const BenchOptions& options) {
  if (options.last_seed < options.first_seed)
    throw Error(ErrorKind::kSpec, "corpus-seeds", "seed range is empty");
  const std::uint64_t count = options.last_seed - options.first_seed + 1;
  std::vector<RatioRecord> records(count);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::uint64_t i = next++; i < count; i = next++) {
      try {
        const std::uint64_t seed = options.first_seed + i;
        const Instance inst = generate(corpus_spec(options.kind, seed, options.bounds));
        records[i] = diagnose(inst, seed, options.limits, options.claim);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  const unsigned jobs = std::max(1U, options.jobs);
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

BenchSummary summarize(const std::vector<RatioRecord>& records) {
  BenchSummary s;
  s.instances = records.size();
  for (const auto& r : records) {
    if (!r.hard_violations.empty()) ++s.hard_violations;
    if (!r.findings.empty()) ++s.paper_findings;
  }
  return s;
}

namespace {

std::string Flag(const std::optional<bool>& b) {
  if (!b) return "NA";
  return *b ? "true" : "false";
}

std::string Fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string to_csv(const std::vector<RatioRecord>& records) {
  std::string out = kBenchCsvHeader;
  out += '\n';
  for (const auto& r : records) {
    out += std::to_string(r.seed) + ',' + std::to_string(r.n) + ',' + std::to_string(r.k) + ',' +
           std::to_string(r.m) + ',' + std::to_string(r.rounds) + ',' +
           std::to_string(r.objective) + ',';
    if (r.opt) {
      out += std::to_string(*r.opt) + ',' + Fixed(r.ln_bound) + ',' + Fixed(r.safe_bound) + ',';
    } else {
      out += "NA,NA,NA,";
    }
    out += Flag(r.lemma_ok) + ',' + Flag(r.claim_ok) + '\n';
  }
  return out;
}

nlohmann::json summary_to_json(const BenchSummary& s) {
  return {{"instances", s.instances},
          {"hard_violations", s.hard_violations},
          {"paper_findings", s.paper_findings}};
}

}  // namespace vsc
