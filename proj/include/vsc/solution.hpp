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

#ifndef VSC_SOLUTION_HPP_
#define VSC_SOLUTION_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vsc/instance.hpp"

namespace vsc {

struct AgentPicks {
  std::size_t agent = 0;
  std::vector<std::size_t> sets;

  friend bool operator==(const AgentPicks&, const AgentPicks&) = default;
};

using Round = std::vector<AgentPicks>;

struct Solution {
  std::vector<std::size_t> picked;  // pick order
  std::vector<Round> schedule;      // schedule[r] holds the picks of round r+1
  std::size_t rounds = 0;
  std::size_t objective = 0;

  friend bool operator==(const Solution&, const Solution&) = default;
};

struct VerificationReport {
  struct Failure {
    std::string check;  // indices | cover | objective | schedule | budget | rounds
    std::string detail;
  };
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  bool failed(std::string_view check) const;
};

// Checks cover validity, the stored objective, per-round per-agent budgets
// and objective <= rounds. Never throws on a bad solution; every problem is
// listed in the report.
VerificationReport verify_solution(const Instance& inst, const Solution& sol);

// Packs an arbitrary pick list into the tightest schedule: each agent's sets
// are spread over consecutive rounds, weight(i) per round. The result has
// rounds == objective.
Solution schedule_picks(const Instance& inst, std::span<const std::size_t> picked);

// Drops empty rounds and empty per-agent entries.
void canonicalize(Solution& sol);

}  // namespace vsc

#endif  // VSC_SOLUTION_HPP_
