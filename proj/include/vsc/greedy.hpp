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

#ifndef VSC_GREEDY_HPP_
#define VSC_GREEDY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vsc/element_set.hpp"
#include "vsc/instance.hpp"
#include "vsc/solution.hpp"

namespace vsc {

enum class TieBreak { kLowestIndex };

struct GreedyConfig {
  bool trace = false;
  TieBreak tie_break = TieBreak::kLowestIndex;
};

struct PickRecord {
  std::size_t agent = 0;
  std::size_t set = 0;
  std::size_t gain = 0;

  friend bool operator==(const PickRecord&, const PickRecord&) = default;
};

// State after `round` rounds. Record 0 is the initial state.
struct ResidualSnapshot {
  std::size_t round = 0;
  std::size_t uncovered = 0;  // n_l
  ElementSet covered;         // C_l
  std::vector<std::size_t> surviving_sets;    // unpicked, non-empty residual
  std::vector<std::size_t> agent_remaining;   // |A_i^l|, unpicked sets per agent
  std::vector<PickRecord> picks;              // picks made during this round
  std::size_t gained = 0;                     // n_{l-1} - n_l, 0 for record 0

  friend bool operator==(const ResidualSnapshot&, const ResidualSnapshot&) = default;
};

struct ResidualTrace {
  std::size_t n = 0;
  std::vector<ResidualSnapshot> records;  // records[l] is the state after round l

  std::size_t final_round() const { return records.empty() ? 0 : records.size() - 1; }
  friend bool operator==(const ResidualTrace&, const ResidualTrace&) = default;
};

struct GreedyResult {
  Solution solution;
  std::optional<ResidualTrace> trace;

  friend bool operator==(const GreedyResult&, const GreedyResult&) = default;
};

// The round-based greedy. Each round visits agents in index order; agent i
// makes up to weight(i) picks, each the unpicked owned set with maximum
// marginal gain (lowest index on ties). A zero best gain ends the agent's
// turn. The run stops the moment every element is covered, even mid-round.
// Validates the instance first.
GreedyResult greedy_solve(const Instance& inst, const GreedyConfig& cfg = {});

struct ResidualState {
  std::size_t uncovered = 0;
  std::vector<std::size_t> surviving_sets;
  std::vector<std::size_t> agent_remaining;
};

// Snapshot of round `round` (0 = before the first round). Throws kIndex
// when `round` is past the final round.
ResidualState residual_state(const ResidualTrace& trace, std::size_t round);

// One JSON object per completed round:
//   {"round": l, "n_l": int, "gained": int, "picks": [{"agent","set","gain"}...]}
std::string trace_to_jsonl(const ResidualTrace& trace);

}  // namespace vsc

#endif  // VSC_GREEDY_HPP_
