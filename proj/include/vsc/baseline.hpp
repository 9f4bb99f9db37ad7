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

#ifndef VSC_BASELINE_HPP_
#define VSC_BASELINE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vsc/instance.hpp"

namespace vsc {

// Ownership-blind greedy set cover: repeatedly the unpicked set with the
// largest marginal gain over all sets, lowest index on ties, until covered.
std::vector<std::size_t> classic_greedy(const Instance& inst);

struct ImbalanceReport {
  std::size_t baseline_objective = 0;
  std::size_t vsc_objective = 0;
  std::size_t vsc_rounds = 0;
  std::optional<std::size_t> opt;
};

// Objective of an ownership-blind cover next to the round greedy's result.
// Throws kIndex / kDuplicate for bad indices and kCoverage when `cover`
// does not cover the universe.
ImbalanceReport imbalance_report(const Instance& inst, std::span<const std::size_t> cover);

}  // namespace vsc

#endif  // VSC_BASELINE_HPP_
