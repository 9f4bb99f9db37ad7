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

#ifndef VSC_INSTANCE_HPP_
#define VSC_INSTANCE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vsc/element_set.hpp"

namespace vsc {

struct Agent {
  std::string name;
  int weight = 1;  // sets the agent can execute per round

  friend bool operator==(const Agent&, const Agent&) = default;
};

// A validation set cover instance: universe 0..n-1, the set system, the
// partition of sets among agents (owner) and the per-agent weights.
//
// Instances are built through make_instance() or load_instance(), both of
// which enforce every invariant; after that the value is treated as
// immutable.
struct Instance {
  std::size_t n = 0;
  std::vector<ElementSet> sets;
  std::vector<std::size_t> owner;  // owner[j] is the agent owning sets[j]
  std::vector<Agent> agents;
  // Optional display labels for elements (e.g. "u-v" for graph edges).
  std::vector<std::string> element_labels;

  std::size_t k() const { return sets.size(); }
  std::size_t m() const { return agents.size(); }
  int weight(std::size_t agent) const { return agents[agent].weight; }

  // Set indices owned by `agent`, ascending.
  std::vector<std::size_t> sets_of(std::size_t agent) const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Agent description in the external (file) form: sets listed by index.
struct AgentSpec {
  std::string name;
  std::int64_t weight = 1;
  std::vector<std::int64_t> sets;
};

// Builds a validated instance. Throws vsc::Error with kind kPartition,
// kWeight, kRange or kCoverage when an invariant does not hold. Repeated
// elements inside one set are merged.
Instance make_instance(std::int64_t n, const std::vector<std::vector<std::int64_t>>& sets,
                       const std::vector<AgentSpec>& agents,
                       std::vector<std::string> element_labels = {});

// Re-checks every invariant of an already built instance.
void validate(const Instance& inst);

// max_i ceil(c_i / w_i), c_i = number of picked sets owned by agent i.
// Does not require `picked` to be a cover. Throws kIndex / kDuplicate.
std::size_t objective(const Instance& inst, std::span<const std::size_t> picked);

// Per-agent counts of picked sets.
std::vector<std::size_t> agent_loads(const Instance& inst, std::span<const std::size_t> picked);

// Union of the picked sets.
ElementSet covered_by(const Instance& inst, std::span<const std::size_t> picked);

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace vsc

#endif  // VSC_INSTANCE_HPP_
