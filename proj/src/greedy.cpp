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

#include "vsc/greedy.hpp"

#include <string>

#include "json.hpp"
#include "vsc/error.hpp"

namespace vsc {

namespace {

ResidualSnapshot Snapshot(const Instance& inst, std::size_t round, const ElementSet& covered,
                          const std::vector<bool>& picked) {
  ResidualSnapshot s;
  s.round = round;
  s.covered = covered;
  s.uncovered = inst.n - covered.cardinality();
  s.agent_remaining.assign(inst.m(), 0);
  for (std::size_t j = 0; j < inst.k(); ++j) {
    if (picked[j]) continue;
    ++s.agent_remaining[inst.owner[j]];
    if (inst.sets[j].count_minus(covered) > 0) s.surviving_sets.push_back(j);
  }
  return s;
}

}  // namespace

GreedyResult greedy_solve(const Instance& inst, const GreedyConfig& cfg) {
  validate(inst);

  std::vector<std::vector<std::size_t>> candidates(inst.m());
  for (std::size_t j = 0; j < inst.k(); ++j) candidates[inst.owner[j]].push_back(j);

  GreedyResult result;
  Solution& sol = result.solution;
  std::vector<bool> picked(inst.k(), false);
  ElementSet covered(inst.n);
  std::size_t uncovered = inst.n;

  if (cfg.trace) {
    result.trace.emplace();
    result.trace->n = inst.n;
    result.trace->records.push_back(Snapshot(inst, 0, covered, picked));
  }

  std::size_t rounds = 0;
  while (uncovered > 0) {
    ++rounds;
    const std::size_t uncovered_before = uncovered;
    Round round;
    std::vector<PickRecord> records;
    for (std::size_t i = 0; i < inst.m() && uncovered > 0; ++i) {
      AgentPicks turn{i, {}};
      for (int budget = inst.weight(i); budget > 0 && uncovered > 0; --budget) {
        std::size_t best = 0;
        std::size_t best_gain = 0;
        for (std::size_t j : candidates[i]) {
          if (picked[j]) continue;
          const std::size_t gain = inst.sets[j].count_minus(covered);
          if (gain > best_gain) {
            best = j;
            best_gain = gain;
          }
        }
        // Every remaining owned set is useless; the rest of the turn is forfeited.
        if (best_gain == 0) break;
        picked[best] = true;
        covered |= inst.sets[best];
        uncovered -= best_gain;
        turn.sets.push_back(best);
        sol.picked.push_back(best);
        records.push_back({i, best, best_gain});
      }
      if (!turn.sets.empty()) round.push_back(std::move(turn));
    }
    if (uncovered == uncovered_before)
      throw Error(ErrorKind::kInternal, "",
                  "round " + std::to_string(rounds) + " covered nothing with " +
                      std::to_string(uncovered) + " elements left");
    sol.schedule.push_back(std::move(round));
    if (cfg.trace) {
      auto snap = Snapshot(inst, rounds, covered, picked);
      snap.picks = std::move(records);
      snap.gained = uncovered_before - uncovered;
      result.trace->records.push_back(std::move(snap));
    }
  }
  sol.rounds = rounds;
  sol.objective = objective(inst, sol.picked);
  return result;
}

ResidualState residual_state(const ResidualTrace& trace, std::size_t round) {
  if (round >= trace.records.size())
    throw Error(ErrorKind::kIndex, "round",
                "round " + std::to_string(round) + " is past the final round " +
                    std::to_string(trace.final_round()));
  const ResidualSnapshot& s = trace.records[round];
  return {s.uncovered, s.surviving_sets, s.agent_remaining};
}

std::string trace_to_jsonl(const ResidualTrace& trace) {
  std::string out;
  for (std::size_t l = 1; l < trace.records.size(); ++l) {
    const ResidualSnapshot& s = trace.records[l];
    nlohmann::json picks = nlohmann::json::array();
    for (const PickRecord& p : s.picks)
      picks.push_back({{"agent", p.agent}, {"set", p.set}, {"gain", p.gain}});
    nlohmann::json rec = {
        {"round", s.round}, {"n_l", s.uncovered}, {"gained", s.gained}, {"picks", picks}};
    out += rec.dump();
    out += '\n';
  }
  return out;
}

}  // namespace vsc
