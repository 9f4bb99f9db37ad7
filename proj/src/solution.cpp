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

#include "vsc/solution.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace vsc {

bool VerificationReport::failed(std::string_view check) const {
  return std::any_of(failures.begin(), failures.end(),
                     [&](const Failure& f) { return f.check == check; });
}

VerificationReport verify_solution(const Instance& inst, const Solution& sol) {
  VerificationReport report;
  auto fail = [&](std::string check, std::string detail) {
    report.failures.push_back({std::move(check), std::move(detail)});
  };

  // Index sanity first; the remaining checks only look at valid entries.
  std::vector<int> in_picked(inst.k(), 0);
  bool indices_ok = true;
  for (std::size_t j : sol.picked) {
    if (j >= inst.k()) {
      fail("indices", "picked set " + std::to_string(j) + " does not exist (k=" +
                          std::to_string(inst.k()) + ")");
      indices_ok = false;
    } else if (++in_picked[j] == 2) {
      fail("indices", "set " + std::to_string(j) + " is picked more than once");
      indices_ok = false;
    }
  }

  ElementSet covered(inst.n);
  for (std::size_t j = 0; j < inst.k(); ++j)
    if (in_picked[j] > 0) covered |= inst.sets[j];
  if (!covered.full()) {
    const auto missing = (ElementSet::Full(inst.n) - covered).elements();
    std::string detail = "uncovered element";
    detail += missing.size() > 1 ? "s" : "";
    for (std::size_t i = 0; i < missing.size() && i < 10; ++i)
      detail += (i == 0 ? " " : ", ") + std::to_string(missing[i]);
    if (missing.size() > 10) detail += ", ... (" + std::to_string(missing.size()) + " total)";
    fail("cover", detail);
  }

  if (indices_ok) {
    const std::size_t recomputed = objective(inst, sol.picked);
    if (recomputed != sol.objective)
      fail("objective", "stored objective " + std::to_string(sol.objective) +
                            " but the picked sets give " + std::to_string(recomputed));
  }

  std::vector<int> in_schedule(inst.k(), 0);
  for (std::size_t r = 0; r < sol.schedule.size(); ++r) {
    const std::string round_name = "round " + std::to_string(r + 1);
    std::map<std::size_t, std::size_t> per_agent;
    for (const AgentPicks& ap : sol.schedule[r]) {
      if (ap.agent >= inst.m()) {
        fail("schedule", round_name + ": agent " + std::to_string(ap.agent) + " does not exist");
        continue;
      }
      per_agent[ap.agent] += ap.sets.size();
      for (std::size_t j : ap.sets) {
        if (j >= inst.k()) {
          fail("schedule", round_name + ": set " + std::to_string(j) + " does not exist");
          continue;
        }
        if (inst.owner[j] != ap.agent)
          fail("schedule", round_name + ": agent " + std::to_string(ap.agent) + " picks set " +
                               std::to_string(j) + " owned by agent " +
                               std::to_string(inst.owner[j]));
        if (++in_schedule[j] == 2)
          fail("schedule", "set " + std::to_string(j) + " is scheduled more than once");
      }
    }
    for (const auto& [agent, count] : per_agent)
      if (count > static_cast<std::size_t>(inst.weight(agent)))
        fail("budget", round_name + ": agent " + std::to_string(agent) + " picks " +
                           std::to_string(count) + " sets, weight is " +
                           std::to_string(inst.weight(agent)));
  }
  for (std::size_t j = 0; j < inst.k(); ++j) {
    if (in_picked[j] > 0 && in_schedule[j] == 0)
      fail("schedule", "picked set " + std::to_string(j) + " is missing from the schedule");
    if (in_picked[j] == 0 && in_schedule[j] > 0)
      fail("schedule", "scheduled set " + std::to_string(j) + " is not in picked");
  }

  if (sol.objective > sol.rounds)
    fail("rounds", "objective " + std::to_string(sol.objective) + " exceeds rounds " +
                       std::to_string(sol.rounds));
  if (sol.schedule.size() > sol.rounds)
    fail("rounds", "schedule has " + std::to_string(sol.schedule.size()) +
                       " rounds but rounds is " + std::to_string(sol.rounds));
  return report;
}

Solution schedule_picks(const Instance& inst, std::span<const std::size_t> picked) {
  Solution sol;
  sol.picked.assign(picked.begin(), picked.end());
  sol.objective = objective(inst, picked);
  sol.rounds = sol.objective;
  sol.schedule.resize(sol.rounds);
  std::vector<std::size_t> used(inst.m(), 0);
  std::vector<std::vector<std::size_t>> slots(sol.rounds * inst.m());
  for (std::size_t j : picked) {
    const std::size_t i = inst.owner[j];
    const std::size_t r = used[i]++ / static_cast<std::size_t>(inst.weight(i));
    slots[r * inst.m() + i].push_back(j);
  }
  for (std::size_t r = 0; r < sol.rounds; ++r)
    for (std::size_t i = 0; i < inst.m(); ++i)
      if (!slots[r * inst.m() + i].empty())
        sol.schedule[r].push_back({i, std::move(slots[r * inst.m() + i])});
  return sol;
}

void canonicalize(Solution& sol) {
  for (Round& round : sol.schedule)
    std::erase_if(round, [](const AgentPicks& ap) { return ap.sets.empty(); });
  std::erase_if(sol.schedule, [](const Round& r) { return r.empty(); });
}

}  // namespace vsc
