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

#include "vsc/exact.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "vsc/error.hpp"

namespace vsc {

namespace {

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

// Failed states of one budget search, keyed by the covered set. A state
// fails whenever its budgets are componentwise <= those of a stored failure.
class FailureMemo {
 public:
  static constexpr std::size_t kMaxEntries = 4'000'000;

  bool dominated(const ElementSet& covered, const std::vector<std::size_t>& budgets) const {
    auto it = failed_.find(covered);
    if (it == failed_.end()) return false;
    for (const auto& stored : it->second)
      if (LessEqual(budgets, stored)) return true;
    return false;
  }

  void insert(const ElementSet& covered, const std::vector<std::size_t>& budgets) {
    if (entries_ >= kMaxEntries) return;
    auto& list = failed_[covered];
    const std::size_t before = list.size();
    std::erase_if(list, [&](const auto& stored) { return LessEqual(stored, budgets); });
    entries_ -= before - list.size();
    list.push_back(budgets);
    ++entries_;
  }

 private:
  static bool LessEqual(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  }

  std::unordered_map<ElementSet, std::vector<std::vector<std::size_t>>, ElementSetHash> failed_;
  std::size_t entries_ = 0;
};

class BudgetDfs {
 public:
  BudgetDfs(const Instance& inst, std::vector<std::size_t> budgets, std::uint64_t max_nodes)
      : inst_(inst), budgets_(std::move(budgets)), max_nodes_(max_nodes),
        containing_(inst.n), owned_(inst.m()) {
    for (std::size_t j = 0; j < inst.k(); ++j) {
      inst.sets[j].for_each([&](std::size_t e) { containing_[e].push_back(j); });
      owned_[inst.owner[j]].push_back(j);
    }
  }

  BudgetSearch run() {
    BudgetSearch out;
    ElementSet covered(inst_.n);
    const bool found = Search(covered);
    out.nodes = nodes_;
    if (aborted_) {
      out.result = Feasibility::kUnknown;
    } else if (found) {
      out.result = Feasibility::kFeasible;
      out.witness = chosen_;
      std::sort(out.witness.begin(), out.witness.end());
    } else {
      out.result = Feasibility::kInfeasible;
    }
    return out;
  }

 private:
  bool Search(const ElementSet& covered) {
    if (++nodes_ > max_nodes_) {
      aborted_ = true;
      return false;
    }
    const std::size_t e = covered.first_missing();
    if (e == inst_.n) return true;
    if (memo_.dominated(covered, budgets_)) return false;

    // Capacity bound: each agent adds at most budget * (its best residual gain).
    const std::size_t remaining = inst_.n - covered.cardinality();
    std::size_t capacity = 0;
    for (std::size_t i = 0; i < inst_.m() && capacity < remaining; ++i) {
      if (budgets_[i] == 0) continue;
      std::size_t best = 0;
      for (std::size_t j : owned_[i]) best = std::max(best, inst_.sets[j].count_minus(covered));
      capacity += budgets_[i] * best;
    }
    if (capacity < remaining) {
      memo_.insert(covered, budgets_);
      return false;
    }

    std::vector<std::pair<std::size_t, std::size_t>> branches;  // (gain, set)
    for (std::size_t j : containing_[e])
      if (budgets_[inst_.owner[j]] > 0)
        branches.emplace_back(inst_.sets[j].count_minus(covered), j);
    std::sort(branches.begin(), branches.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    for (const auto& [gain, j] : branches) {
      const std::size_t agent = inst_.owner[j];
      --budgets_[agent];
      chosen_.push_back(j);
      if (Search(covered | inst_.sets[j])) return true;
      chosen_.pop_back();
      ++budgets_[agent];
      if (aborted_) return false;
    }
    memo_.insert(covered, budgets_);
    return false;
  }

  const Instance& inst_;
  std::vector<std::size_t> budgets_;
  std::uint64_t max_nodes_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<std::vector<std::size_t>> owned_;
  std::vector<std::size_t> chosen_;
  FailureMemo memo_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

ExactResult Unknown(std::string reason, std::uint64_t nodes) {
  ExactResult r;
  r.status = ExactStatus::kUnknown;
  r.reason = std::move(reason);
  r.nodes = nodes;
  return r;
}

}  // namespace

BudgetSearch decide_budget(const Instance& inst, std::size_t rounds, std::uint64_t max_nodes) {
  std::vector<std::size_t> budgets(inst.m(), 0);
  for (std::size_t i = 0; i < inst.m(); ++i) {
    const std::size_t owned = inst.sets_of(i).size();
    const auto w = static_cast<std::size_t>(inst.weight(i));
    budgets[i] = rounds > owned / w ? owned : std::min(owned, rounds * w);
  }
  return BudgetDfs(inst, std::move(budgets), max_nodes).run();
}

ExactResult exact_solve(const Instance& inst, const OracleLimits& limits) {
  if (limits.max_sets == 0 || limits.max_nodes == 0)
    throw Error(ErrorKind::kSpec, "limits", "oracle limits must be positive");
  validate(inst);
  if (inst.k() > limits.max_sets)
    return Unknown("instance has " + std::to_string(inst.k()) + " sets, above the cap of " +
                       std::to_string(limits.max_sets),
                   0);
  if (inst.n == 0) {
    ExactResult r;
    r.status = ExactStatus::kOptimal;
    return r;
  }

  const std::size_t upper = greedy_solve(inst).solution.objective;
  std::uint64_t nodes = 0;
  for (std::size_t t = 1; t <= upper; ++t) {
    BudgetSearch s = decide_budget(inst, t, limits.max_nodes - nodes);
    nodes += s.nodes;
    if (s.result == Feasibility::kUnknown)
      return Unknown("node budget of " + std::to_string(limits.max_nodes) + " exhausted at t=" +
                         std::to_string(t),
                     nodes);
    if (s.result == Feasibility::kFeasible) {
      if (objective(inst, s.witness) != t || !covered_by(inst, s.witness).full())
        throw Error(ErrorKind::kInternal, "", "exact search produced an inconsistent witness");
      ExactResult r;
      r.status = ExactStatus::kOptimal;
      r.opt = t;
      r.witness = std::move(s.witness);
      r.nodes = nodes;
      return r;
    }
  }
  throw Error(ErrorKind::kInternal, "",
              "exact search found no cover within the greedy objective " + std::to_string(upper));
}

ResidualInstance make_residual(const Instance& inst, const ElementSet& covered,
                               std::span<const std::size_t> picked) {
  ResidualInstance out;
  std::vector<std::size_t> new_index(inst.n, std::numeric_limits<std::size_t>::max());
  for (std::size_t e = 0; e < inst.n; ++e) {
    if (covered.contains(e)) continue;
    new_index[e] = out.element_origin.size();
    out.element_origin.push_back(e);
  }
  std::vector<bool> is_picked(inst.k(), false);
  for (std::size_t j : picked) {
    if (j >= inst.k()) throw Error(ErrorKind::kIndex, "picked", "set index out of range");
    is_picked[j] = true;
  }

  Instance& r = out.instance;
  r.n = out.element_origin.size();
  r.agents = inst.agents;
  if (!inst.element_labels.empty())
    for (std::size_t e : out.element_origin) r.element_labels.push_back(inst.element_labels[e]);
  for (std::size_t j = 0; j < inst.k(); ++j) {
    if (is_picked[j]) continue;
    ElementSet s(r.n);
    inst.sets[j].for_each([&](std::size_t e) {
      if (!covered.contains(e)) s.insert(new_index[e]);
    });
    if (s.empty()) continue;
    r.sets.push_back(std::move(s));
    r.owner.push_back(inst.owner[j]);
    out.set_origin.push_back(j);
  }
  validate(r);
  return out;
}

ResidualInstance make_residual(const Instance& inst, const ResidualTrace& trace,
                               std::size_t round) {
  if (round >= trace.records.size())
    throw Error(ErrorKind::kIndex, "round",
                "round " + std::to_string(round) + " is past the final round " +
                    std::to_string(trace.final_round()));
  std::vector<std::size_t> picked;
  for (std::size_t l = 1; l <= round; ++l)
    for (const PickRecord& p : trace.records[l].picks) picked.push_back(p.set);
  return make_residual(inst, trace.records[round].covered, picked);
}

ExactResult residual_opt(const Instance& inst, const ResidualTrace& trace, std::size_t round,
                         const OracleLimits& limits) {
  return exact_solve(make_residual(inst, trace, round).instance, limits);
}

}  // namespace vsc
