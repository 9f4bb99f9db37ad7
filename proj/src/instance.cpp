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

#include "vsc/instance.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "vsc/error.hpp"

namespace vsc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax: return "syntax";
    case ErrorKind::kPartition: return "partition";
    case ErrorKind::kWeight: return "weight";
    case ErrorKind::kRange: return "range";
    case ErrorKind::kCoverage: return "coverage";
    case ErrorKind::kIndex: return "index";
    case ErrorKind::kDuplicate: return "duplicate";
    case ErrorKind::kSpec: return "spec";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

std::vector<std::size_t> Instance::sets_of(std::size_t agent) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < owner.size(); ++j)
    if (owner[j] == agent) out.push_back(j);
  return out;
}

namespace {

void CheckCoverage(const Instance& inst) {
  ElementSet all(inst.n);
  for (const auto& s : inst.sets) all |= s;
  std::size_t missing = all.first_missing();
  if (missing < inst.n)
    throw Error(ErrorKind::kCoverage, "sets",
                "element " + std::to_string(missing) + " is not covered by any set");
}

}  // namespace

Instance make_instance(std::int64_t n, const std::vector<std::vector<std::int64_t>>& sets,
                       const std::vector<AgentSpec>& agents,
                       std::vector<std::string> element_labels) {
  if (n < 0) throw Error(ErrorKind::kSyntax, "n", "n must be non-negative");
  Instance inst;
  inst.n = static_cast<std::size_t>(n);
  inst.sets.reserve(sets.size());
  for (std::size_t j = 0; j < sets.size(); ++j) {
    ElementSet s(inst.n);
    for (std::int64_t e : sets[j]) {
      if (e < 0 || e >= n)
        throw Error(ErrorKind::kRange, "sets[" + std::to_string(j) + "]",
                    "set " + std::to_string(j) + " references element " + std::to_string(e) +
                        " outside 0.." + std::to_string(n - 1));
      s.insert(static_cast<std::size_t>(e));
    }
    inst.sets.push_back(std::move(s));
  }

  constexpr std::size_t kUnowned = static_cast<std::size_t>(-1);
  inst.owner.assign(sets.size(), kUnowned);
  inst.agents.reserve(agents.size());
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const AgentSpec& a = agents[i];
    const std::string field = "agents[" + std::to_string(i) + "]";
    if (a.weight < 1)
      throw Error(ErrorKind::kWeight, field + ".weight",
                  "agent " + std::to_string(i) + " has weight " + std::to_string(a.weight) +
                      "; weights must be >= 1");
    if (a.weight > std::numeric_limits<int>::max())
      throw Error(ErrorKind::kWeight, field + ".weight", "agent weight too large");
    for (std::int64_t j : a.sets) {
      if (j < 0 || static_cast<std::size_t>(j) >= sets.size())
        throw Error(ErrorKind::kPartition, field + ".sets",
                    "agent " + std::to_string(i) + " owns unknown set " + std::to_string(j));
      auto& o = inst.owner[static_cast<std::size_t>(j)];
      if (o != kUnowned)
        throw Error(ErrorKind::kPartition, field + ".sets",
                    "set " + std::to_string(j) + " is owned by agents " + std::to_string(o) +
                        " and " + std::to_string(i));
      o = i;
    }
    inst.agents.push_back({a.name, static_cast<int>(a.weight)});
  }
  for (std::size_t j = 0; j < inst.owner.size(); ++j)
    if (inst.owner[j] == kUnowned)
      throw Error(ErrorKind::kPartition, "agents",
                  "set " + std::to_string(j) + " has no owner");

  if (!element_labels.empty() && element_labels.size() != inst.n)
    throw Error(ErrorKind::kSyntax, "element_labels",
                "element_labels must have exactly n entries");
  inst.element_labels = std::move(element_labels);

  CheckCoverage(inst);
  return inst;
}

void validate(const Instance& inst) {
  if (inst.owner.size() != inst.sets.size())
    throw Error(ErrorKind::kPartition, "owner", "owner table does not match the set count");
  for (std::size_t j = 0; j < inst.sets.size(); ++j) {
    if (inst.sets[j].size() != inst.n)
      throw Error(ErrorKind::kRange, "sets[" + std::to_string(j) + "]",
                  "set " + std::to_string(j) + " has the wrong universe width");
    if (inst.owner[j] >= inst.agents.size())
      throw Error(ErrorKind::kPartition, "owner",
                  "set " + std::to_string(j) + " has owner " + std::to_string(inst.owner[j]) +
                      " but there are " + std::to_string(inst.agents.size()) + " agents");
  }
  for (std::size_t i = 0; i < inst.agents.size(); ++i)
    if (inst.agents[i].weight < 1)
      throw Error(ErrorKind::kWeight, "agents[" + std::to_string(i) + "].weight",
                  "agent " + std::to_string(i) + " has weight < 1");
  if (!inst.element_labels.empty() && inst.element_labels.size() != inst.n)
    throw Error(ErrorKind::kSyntax, "element_labels",
                "element_labels must have exactly n entries");
  CheckCoverage(inst);
}

std::vector<std::size_t> agent_loads(const Instance& inst, std::span<const std::size_t> picked) {
  std::vector<std::size_t> loads(inst.m(), 0);
  std::vector<bool> seen(inst.k(), false);
  for (std::size_t j : picked) {
    if (j >= inst.k())
      throw Error(ErrorKind::kIndex, "picked",
                  "set index " + std::to_string(j) + " out of range (k=" +
                      std::to_string(inst.k()) + ")");
    if (seen[j])
      throw Error(ErrorKind::kDuplicate, "picked",
                  "set index " + std::to_string(j) + " picked twice");
    seen[j] = true;
    ++loads[inst.owner[j]];
  }
  return loads;
}

std::size_t objective(const Instance& inst, std::span<const std::size_t> picked) {
  const auto loads = agent_loads(inst, picked);
  std::size_t best = 0;
  for (std::size_t i = 0; i < loads.size(); ++i)
    best = std::max(best, ceil_div(loads[i], static_cast<std::size_t>(inst.weight(i))));
  return best;
}

ElementSet covered_by(const Instance& inst, std::span<const std::size_t> picked) {
  ElementSet c(inst.n);
  for (std::size_t j : picked) {
    if (j >= inst.k())
      throw Error(ErrorKind::kIndex, "picked", "set index " + std::to_string(j) + " out of range");
    c |= inst.sets[j];
  }
  return c;
}

}  // namespace vsc
