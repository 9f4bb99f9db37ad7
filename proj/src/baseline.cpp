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

#include "vsc/baseline.hpp"

#include "vsc/error.hpp"
#include "vsc/greedy.hpp"

namespace vsc {

std::vector<std::size_t> classic_greedy(const Instance& inst) {
  validate(inst);
  std::vector<std::size_t> order;
  std::vector<bool> picked(inst.k(), false);
  ElementSet covered(inst.n);
  std::size_t uncovered = inst.n;
  while (uncovered > 0) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t j = 0; j < inst.k(); ++j) {
      if (picked[j]) continue;
      const std::size_t gain = inst.sets[j].count_minus(covered);
      if (gain > best_gain) {
        best = j;
        best_gain = gain;
      }
    }
    if (best_gain == 0)
      throw Error(ErrorKind::kInternal, "", "no set covers the remaining elements");
    picked[best] = true;
    covered |= inst.sets[best];
    uncovered -= best_gain;
    order.push_back(best);
  }
  return order;
}

ImbalanceReport imbalance_report(const Instance& inst, std::span<const std::size_t> cover) {
  ImbalanceReport report;
  report.baseline_objective = objective(inst, cover);
  const ElementSet covered = covered_by(inst, cover);
  if (!covered.full())
    throw Error(ErrorKind::kCoverage, "cover",
                "element " + std::to_string(covered.first_missing()) +
                    " is not covered by the baseline cover");
  const Solution vsc = greedy_solve(inst).solution;
  report.vsc_objective = vsc.objective;
  report.vsc_rounds = vsc.rounds;
  return report;
}

}  // namespace vsc
