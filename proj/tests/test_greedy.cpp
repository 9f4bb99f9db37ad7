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

#include <random>

#include "doctest.h"
#include "json.hpp"
#include "support/oracles.hpp"
#include "vsc/error.hpp"
#include "vsc/greedy.hpp"

namespace vsc {
namespace {

GreedyResult Traced(const Instance& inst) {
  GreedyConfig cfg;
  cfg.trace = true;
  return greedy_solve(inst, cfg);
}

TEST_CASE("single covering set finishes in one round") {
  const Instance inst = make_instance(2, {{0, 1}}, {{"", 1, {0}}});
  const Solution sol = greedy_solve(inst).solution;
  CHECK(sol.rounds == 1);
  CHECK(sol.picked == std::vector<std::size_t>{0});
  CHECK(sol.objective == 1);
}

TEST_CASE("two singletons with one agent take two rounds, lowest index first") {
  const Instance inst = make_instance(2, {{0}, {1}}, {{"", 1, {0, 1}}});
  const Solution sol = greedy_solve(inst).solution;
  CHECK(sol.rounds == 2);
  CHECK(sol.picked == std::vector<std::size_t>{0, 1});
  CHECK(sol.objective == 2);
  CHECK(sol.schedule.size() == 2);
}

TEST_CASE("two agents cover four elements in one round") {
  // Hand execution: agent 0 sees gains S0=2, S1=1 and picks S0; agent 1 sees
  // S2=2, S3=0 and picks S2; everything is covered after round 1.
  const Instance inst = make_instance(4, {{0, 1}, {2}, {2, 3}, {0}}, {{"", 1, {0, 1}}, {"", 1, {2, 3}}});
  const GreedyResult r = Traced(inst);
  CHECK(r.solution.rounds == 1);
  CHECK(r.solution.objective == 1);
  CHECK(r.solution.picked == std::vector<std::size_t>{0, 2});
  CHECK(r.solution.schedule == std::vector<Round>{{{0, {0}}, {1, {2}}}});
  CHECK(testing::enumerate_opt(inst) == 1);

  REQUIRE(r.trace);
  CHECK(residual_state(*r.trace, 1).uncovered == 0);
  CHECK(r.trace->records[1].picks ==
        std::vector<PickRecord>{{0, 0, 2}, {1, 2, 2}});
}

TEST_CASE("weight lets an agent pick several sets per round") {
  const Instance inst = make_instance(3, {{0}, {1}, {2}}, {{"", 2, {0, 1, 2}}});
  const Solution sol = greedy_solve(inst).solution;
  CHECK(sol.rounds == 2);
  CHECK(sol.objective == 2);
  CHECK(sol.schedule[0] == Round{{0, {0, 1}}});
  CHECK(sol.schedule[1] == Round{{0, {2}}});
}

TEST_CASE("zero-gain picks are skipped and empty sets never picked") {
  // Agent 0 (weight 2) takes S0; its other set S1 then has gain 0, so the
  // second slot is forfeited. Agent 1 takes S2 and never the empty S3.
  const Instance inst = make_instance(3, {{0, 1}, {0}, {2}, {}}, {{"", 2, {0, 1}}, {"", 1, {2, 3}}});
  const Solution sol = greedy_solve(inst).solution;
  CHECK(sol.picked == std::vector<std::size_t>{0, 2});
  CHECK(sol.rounds == 1);
  CHECK(sol.schedule == std::vector<Round>{{{0, {0}}, {1, {2}}}});
}

TEST_CASE("the run stops mid-round once everything is covered") {
  const Instance inst = make_instance(2, {{0, 1}, {0}, {1}}, {{"", 1, {0}}, {"", 1, {1, 2}}});
  const Solution sol = greedy_solve(inst).solution;
  CHECK(sol.picked == std::vector<std::size_t>{0});
  CHECK(sol.schedule.size() == 1);
}

TEST_CASE("empty universe needs no rounds") {
  const Instance inst = make_instance(0, {{}}, {{"", 1, {0}}});
  const GreedyResult r = Traced(inst);
  CHECK(r.solution.rounds == 0);
  CHECK(r.solution.picked.empty());
  CHECK(r.trace->records.size() == 1);
}

TEST_CASE("greedy rejects an invalid instance") {
  Instance inst = make_instance(2, {{0}, {1}}, {{"", 1, {0, 1}}});
  inst.agents[0].weight = 0;
  CHECK_THROWS_AS(greedy_solve(inst), Error);
  inst.agents[0].weight = 1;
  inst.sets[1] = ElementSet(2);
  CHECK_THROWS_AS(greedy_solve(inst), Error);
}

TEST_CASE("residual_state at round 0 and past the end") {
  const Instance inst = make_instance(3, {{0}, {1, 2}, {}}, {{"", 1, {0, 2}}, {"", 1, {1}}});
  const GreedyResult r = Traced(inst);
  const ResidualState s0 = residual_state(*r.trace, 0);
  CHECK(s0.uncovered == 3);
  CHECK(s0.surviving_sets == std::vector<std::size_t>{0, 1});  // the empty set never survives
  CHECK(s0.agent_remaining == std::vector<std::size_t>{2, 1});
  const std::size_t last = r.trace->final_round();
  CHECK(residual_state(*r.trace, last).uncovered == 0);
  CHECK_THROWS_AS(residual_state(*r.trace, last + 1), Error);
}

TEST_CASE("trace and solution invariants on random instances") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const Instance inst = testing::random_instance(rng, {.n_max = 20, .k_max = 12, .m_max = 4, .w_max = 3});
    const GreedyResult r = Traced(inst);
    const Solution& sol = r.solution;
    const ResidualTrace& t = *r.trace;

    CHECK(verify_solution(inst, sol).ok());
    CHECK(sol.rounds == sol.schedule.size());
    CHECK(sol.objective <= sol.rounds);
    CHECK(t.records.front().uncovered == inst.n);
    CHECK(t.records.back().uncovered == 0);
    CHECK(t.final_round() == sol.rounds);

    std::vector<std::size_t> flat;
    for (std::size_t l = 1; l < t.records.size(); ++l) {
      const auto& prev = t.records[l - 1];
      const auto& cur = t.records[l];
      CHECK(cur.uncovered < prev.uncovered);
      CHECK(prev.covered.is_subset_of(cur.covered));
      CHECK(cur.gained == prev.uncovered - cur.uncovered);
      std::size_t gained = 0;
      for (const auto& p : cur.picks) {
        CHECK(p.gain > 0);
        gained += p.gain;
        flat.push_back(p.set);
      }
      CHECK(gained == cur.gained);
    }
    CHECK(flat == sol.picked);

    // identical second run
    CHECK(Traced(inst) == r);
  }
}

TEST_CASE("one agent with weight 1 replays the textbook set cover greedy") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 500; ++trial) {
    const Instance inst = testing::random_instance(rng, {.n_max = 25, .k_max = 14, .m_max = 1, .w_max = 1});
    const Solution sol = greedy_solve(inst).solution;
    CHECK(sol.picked == testing::reference_set_cover_greedy(testing::to_plain(inst)));
    CHECK(sol.rounds == sol.picked.size());
  }
}

TEST_CASE("trace JSON lines export") {
  const Instance inst = make_instance(3, {{0}, {1}, {2}}, {{"", 2, {0, 1, 2}}});
  const GreedyResult r = Traced(inst);
  const std::string text = trace_to_jsonl(*r.trace);
  CHECK(text ==
        R"({"gained":2,"n_l":1,"picks":[{"agent":0,"gain":1,"set":0},{"agent":0,"gain":1,"set":1}],"round":1})"
        "\n"
        R"({"gained":1,"n_l":0,"picks":[{"agent":0,"gain":1,"set":2}],"round":2})"
        "\n");
}

}  // namespace
}  // namespace vsc
