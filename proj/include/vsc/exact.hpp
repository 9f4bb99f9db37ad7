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

#ifndef VSC_EXACT_HPP_
#define VSC_EXACT_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vsc/element_set.hpp"
#include "vsc/greedy.hpp"
#include "vsc/instance.hpp"

namespace vsc {

struct OracleLimits {
  std::size_t max_sets = 24;
  std::uint64_t max_nodes = 100'000'000;
};

enum class ExactStatus { kOptimal, kUnknown };

// Outcome of the exact search. When status is kUnknown, `opt` and `witness`
// carry no information and must not be used as a bound.
struct ExactResult {
  ExactStatus status = ExactStatus::kUnknown;
  std::size_t opt = 0;
  std::vector<std::size_t> witness;  // ascending set indices
  std::uint64_t nodes = 0;
  std::string reason;  // why the result is unknown

  bool known() const { return status == ExactStatus::kOptimal; }
};

enum class Feasibility { kFeasible, kInfeasible, kUnknown };

struct BudgetSearch {
  Feasibility result = Feasibility::kUnknown;
  std::vector<std::size_t> witness;
  std::uint64_t nodes = 0;
};

// Decides whether U can be covered using at most rounds * weight(i) sets of
// every agent i. Depth-first over the lowest uncovered element, branching on
// each set that contains it (largest residual gain first), with a memo of
// failed (covered, budget) states that also rejects budget-dominated states.
BudgetSearch decide_budget(const Instance& inst, std::size_t rounds, std::uint64_t max_nodes);

// Minimum over covering subcollections of max_i ceil(|A_i ∩ S|/w_i).
// Tries rounds = 1, 2, ... up to greedy's objective; the first feasible
// value is the optimum. Refuses (unknown) when k > limits.max_sets or the
// node budget runs out.
ExactResult exact_solve(const Instance& inst, const OracleLimits& limits = {});

struct ResidualInstance {
  Instance instance;
  std::vector<std::size_t> set_origin;      // residual set index -> original
  std::vector<std::size_t> element_origin;  // residual element -> original
};

// The instance left after covering `covered` with the sets in `picked`:
// covered elements removed (remaining ones re-indexed in order), picked sets
// removed, empty residual sets removed, agents and weights unchanged.
ResidualInstance make_residual(const Instance& inst, const ElementSet& covered,
                               std::span<const std::size_t> picked);

// Residual instance after `round` rounds of a traced greedy run.
ResidualInstance make_residual(const Instance& inst, const ResidualTrace& trace, std::size_t round);

// Exact optimum of the residual instance after `round` rounds. For round 0
// this is exact_solve(inst); for the final round it is 0.
ExactResult residual_opt(const Instance& inst, const ResidualTrace& trace, std::size_t round,
                         const OracleLimits& limits = {});

}  // namespace vsc

#endif  // VSC_EXACT_HPP_
