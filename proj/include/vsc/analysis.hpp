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

#ifndef VSC_ANALYSIS_HPP_
#define VSC_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vsc/exact.hpp"
#include "vsc/generate.hpp"
#include "vsc/greedy.hpp"
#include "vsc/instance.hpp"

namespace vsc {

// Absolute slack granted to an integral round count against a real bound.
inline constexpr double kBoundSlack = 1e-9;

double ln_bound(std::size_t n, std::size_t opt);    // 1 + ln(n) * opt
double safe_bound(std::size_t n, std::size_t opt);  // 1 + 2 ln(n) * opt
bool within_bound(std::size_t rounds, double bound);

struct RatioRecord {
  std::uint64_t seed = 0;
  std::size_t n = 0, k = 0, m = 0;
  std::size_t rounds = 0;
  std::size_t objective = 0;
  std::optional<std::size_t> opt;
  double ln_bound = 0.0;    // valid when opt is known
  double safe_bound = 0.0;  // valid when opt is known
  std::optional<bool> lemma_ok;
  std::optional<bool> claim_ok;

  // Hard assertions: solution verifies, rounds >= objective >= opt, safe
  // bound, opt_l <= opt on every evaluated round.
  std::vector<std::string> hard_violations;
  // Findings: 1 + ln(n) opt bound, per-round decay, per-round coverage.
  std::vector<std::string> findings;
};

// Greedy against the exact optimum on one instance.
RatioRecord theorem_check(const Instance& inst, const OracleLimits& limits = {});

struct LemmaRound {
  std::size_t round = 0;
  std::size_t uncovered = 0;  // n_l
  double bound = 0.0;         // n (1 - 1/opt)^l
  bool ok = false;
};

struct LemmaReport {
  std::optional<std::size_t> opt;  // empty: oracle unknown, nothing evaluated
  std::vector<LemmaRound> rounds;  // l = 1 .. final round

  bool all_ok() const;
};

// n_l <= n (1 - 1/opt)^l for every traced round l >= 1. opt = 1 demands
// n_1 = 0.
LemmaReport lemma_check(const ResidualTrace& trace, std::size_t opt);
LemmaReport lemma_check(const Instance& inst, const OracleLimits& limits = {});

struct ClaimRound {
  std::size_t round = 0;
  std::size_t previous_uncovered = 0;  // n_{l-1}
  std::size_t gained = 0;              // n_{l-1} - n_l
  std::optional<std::size_t> previous_opt;  // opt_{l-1}; empty when unknown
  std::optional<bool> ok;                    // empty when unevaluated
  std::optional<bool> half_ok;               // gained >= n_{l-1} / (2 opt_{l-1})
};

struct ClaimReport {
  std::optional<std::size_t> opt;  // opt_0
  std::vector<ClaimRound> rounds;

  bool all_ok() const;       // every evaluated round holds
  bool all_half_ok() const;  // relaxed form, every evaluated round
  bool residual_opts_bounded() const;  // opt_l <= opt for evaluated rounds
};

// gained_l >= n_{l-1} / opt_{l-1} per round, opt_{l-1} from the exact oracle
// on the residual instance.
ClaimReport claim_check(const Instance& inst, const OracleLimits& limits = {});

// 1 + 1/(x-1) >= e^{1/x} for every integer x in [2, x_max], compared as
// 1/(x-1) >= expm1(1/x) with a relative guard band of 1e-12.
bool taylor_inequality_check(std::uint64_t x_max);

struct BenchOptions {
  GenKind kind = GenKind::kRandom;
  std::uint64_t first_seed = 0;
  std::uint64_t last_seed = 99;  // inclusive
  CorpusBounds bounds;
  OracleLimits limits;
  bool claim = false;
  unsigned jobs = 1;
};

struct BenchSummary {
  std::size_t instances = 0;
  std::size_t hard_violations = 0;
  std::size_t paper_findings = 0;
};

// Full diagnostic record (theorem, lemma, optionally claim) for one instance.
RatioRecord diagnose(const Instance& inst, std::uint64_t seed, const OracleLimits& limits,
                     bool claim);

// Records ordered by seed regardless of job scheduling.
std::vector<RatioRecord> run_bench(const BenchOptions& options);
BenchSummary summarize(const std::vector<RatioRecord>& records);

inline constexpr const char* kBenchCsvHeader =
    "seed,n,k,m,rounds,objective,opt,ln_bound,safe_bound,lemma_ok,claim_ok";
std::string to_csv(const std::vector<RatioRecord>& records);
nlohmann::json summary_to_json(const BenchSummary& summary);

}  // namespace vsc

#endif  // VSC_ANALYSIS_HPP_
