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

// Test-only reference implementations. Nothing here calls the solver code
// paths it is used to check.

#ifndef VSC_TESTS_SUPPORT_ORACLES_HPP_
#define VSC_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "vsc/instance.hpp"

namespace vsc::testing {

// Plain std::set view of an instance, so the oracles do not share the
// bitset code with the implementation.
struct PlainInstance {
  std::size_t n = 0;
  std::vector<std::set<std::size_t>> sets;
  std::vector<std::size_t> owner;
  std::vector<std::size_t> weight;
};

inline PlainInstance to_plain(const Instance& inst) {
  PlainInstance p;
  p.n = inst.n;
  for (const auto& s : inst.sets) {
    const auto e = s.elements();
    p.sets.emplace_back(e.begin(), e.end());
  }
  p.owner = inst.owner;
  for (const auto& a : inst.agents) p.weight.push_back(static_cast<std::size_t>(a.weight));
  return p;
}

// max_i ceil(c_i / w_i) over the sets selected by `mask`.
inline std::size_t mask_objective(const PlainInstance& p, std::uint64_t mask) {
  std::vector<std::size_t> load(p.weight.size(), 0);
  for (std::size_t j = 0; j < p.sets.size(); ++j)
    if (mask >> j & 1U) ++load[p.owner[j]];
  std::size_t best = 0;
  for (std::size_t i = 0; i < load.size(); ++i)
    best = std::max(best, (load[i] + p.weight[i] - 1) / p.weight[i]);
  return best;
}

// Minimum objective over every subcollection (among `allowed` sets) that
// covers `target`. Literal enumeration of all 2^k masks.
inline std::optional<std::size_t> enumerate_opt(const PlainInstance& p,
                                                const std::set<std::size_t>& target,
                                                std::uint64_t allowed) {
  const std::size_t k = p.sets.size();
  std::optional<std::size_t> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if ((mask & ~allowed) != 0) continue;
    std::set<std::size_t> covered;
    for (std::size_t j = 0; j < k; ++j)
      if (mask >> j & 1U) covered.insert(p.sets[j].begin(), p.sets[j].end());
    if (!std::includes(covered.begin(), covered.end(), target.begin(), target.end())) continue;
    const std::size_t v = mask_objective(p, mask);
    if (!best || v < *best) best = v;
  }
  return best;
}

inline std::size_t enumerate_opt(const Instance& inst) {
  const PlainInstance p = to_plain(inst);
  std::set<std::size_t> all;
  for (std::size_t e = 0; e < p.n; ++e) all.insert(e);
  return *enumerate_opt(p, all, (std::uint64_t{1} << p.sets.size()) - 1);
}

// Optimum of the residual problem after `picked` sets covered `covered`:
// subcollections of the unpicked sets covering U \ covered.
inline std::size_t enumerate_residual_opt(const Instance& inst,
                                          const std::vector<std::size_t>& picked) {
  const PlainInstance p = to_plain(inst);
  std::set<std::size_t> covered;
  for (std::size_t j : picked) covered.insert(p.sets[j].begin(), p.sets[j].end());
  std::set<std::size_t> target;
  for (std::size_t e = 0; e < p.n; ++e)
    if (!covered.count(e)) target.insert(e);
  std::uint64_t allowed = (std::uint64_t{1} << p.sets.size()) - 1;
  for (std::size_t j : picked) allowed &= ~(std::uint64_t{1} << j);
  return *enumerate_opt(p, target, allowed);
}

// Textbook greedy set cover on std::set, lowest index on ties.
inline std::vector<std::size_t> reference_set_cover_greedy(const PlainInstance& p) {
  std::set<std::size_t> uncovered;
  for (std::size_t e = 0; e < p.n; ++e) uncovered.insert(e);
  std::vector<bool> used(p.sets.size(), false);
  std::vector<std::size_t> order;
  while (!uncovered.empty()) {
    std::size_t best = p.sets.size(), best_gain = 0;
    for (std::size_t j = 0; j < p.sets.size(); ++j) {
      if (used[j]) continue;
      std::size_t gain = 0;
      for (std::size_t e : p.sets[j]) gain += uncovered.count(e);
      if (gain > best_gain) best = j, best_gain = gain;
    }
    used[best] = true;
    for (std::size_t e : p.sets[best]) uncovered.erase(e);
    order.push_back(best);
  }
  return order;
}

struct RandomShape {
  std::size_t n_max = 12;
  std::size_t k_max = 8;
  std::size_t m_max = 3;
  int w_max = 2;
  bool allow_empty_sets = true;
};

// Arbitrary valid instance: random sets (possibly empty or duplicated),
// random owners, every uncovered element patched into a random set.
inline Instance random_instance(std::mt19937_64& rng, const RandomShape& shape = {}) {
  auto draw = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t n = draw(1, shape.n_max);
  const std::size_t k = draw(1, shape.k_max);
  const std::size_t m = draw(1, std::min(shape.m_max, k));
  std::vector<std::vector<std::int64_t>> sets(k);
  std::vector<bool> covered(n, false);
  for (auto& s : sets) {
    const std::size_t size = draw(shape.allow_empty_sets ? 0 : 1, std::min<std::size_t>(n, 5));
    for (std::size_t t = 0; t < size; ++t) {
      const std::size_t e = draw(0, n - 1);
      s.push_back(static_cast<std::int64_t>(e));
      covered[e] = true;
    }
  }
  for (std::size_t e = 0; e < n; ++e)
    if (!covered[e]) sets[draw(0, k - 1)].push_back(static_cast<std::int64_t>(e));
  std::vector<AgentSpec> agents(m);
  for (std::size_t i = 0; i < m; ++i)
    agents[i].weight = static_cast<std::int64_t>(draw(1, static_cast<std::size_t>(shape.w_max)));
  for (std::size_t j = 0; j < k; ++j)
    agents[j < m ? j : draw(0, m - 1)].sets.push_back(static_cast<std::int64_t>(j));
  return make_instance(static_cast<std::int64_t>(n), sets, agents);
}

}  // namespace vsc::testing

#endif  // VSC_TESTS_SUPPORT_ORACLES_HPP_
