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
#include <sstream>

#include "doctest.h"
#include "support/oracles.hpp"
#include "vsc/error.hpp"
#include "vsc/generate.hpp"
#include "vsc/greedy.hpp"
#include "vsc/io.hpp"

namespace vsc {
namespace {

ErrorKind LoadKind(std::string_view text) {
  try {
    load_instance(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected vsc::Error");
  return ErrorKind::kInternal;
}

TEST_CASE("load_instance reads the documented format") {
  const Instance inst = load_instance(
      R"({"n": 3, "sets": [[0,1],[1,2],[2]],
          "agents": [{"name": "a", "weight": 1, "sets": [0,1]},
                     {"name": "b", "weight": 1, "sets": [2]}]})");
  CHECK(inst.n == 3);
  CHECK(inst.k() == 3);
  CHECK(inst.m() == 2);
  CHECK(inst.agents[1].name == "b");
  CHECK(inst.owner == std::vector<std::size_t>{0, 0, 1});
}

TEST_CASE("load_instance error kinds") {
  CHECK(LoadKind("{not json") == ErrorKind::kSyntax);
  CHECK(LoadKind("[]") == ErrorKind::kSyntax);
  CHECK(LoadKind(R"({"n": 2, "sets": [[0],[1]]})") == ErrorKind::kSyntax);
  CHECK(LoadKind(R"({"n": "2", "sets": [], "agents": []})") == ErrorKind::kSyntax);
  CHECK(LoadKind(R"({"n": 2, "sets": [[0],[1.5]], "agents": []})") == ErrorKind::kSyntax);
  CHECK(LoadKind(R"({"n": 2, "sets": [[0]], "agents": [{"weight": 1, "sets": [0]}]})") ==
        ErrorKind::kCoverage);
  CHECK(LoadKind(R"({"n": 2, "sets": [[0],[1]], "agents": [{"weight": 1, "sets": [0]}]})") ==
        ErrorKind::kPartition);
  CHECK(LoadKind(R"({"n": 2, "sets": [[0],[1]], "agents": [{"weight": 0, "sets": [0,1]}]})") ==
        ErrorKind::kWeight);
  CHECK(LoadKind(R"({"n": 2, "sets": [[0],[5]], "agents": [{"weight": 1, "sets": [0,1]}]})") ==
        ErrorKind::kRange);
}

TEST_CASE("error carries the offending field") {
  try {
    load_instance(R"({"n": 2, "sets": [[0],[1]], "agents": [{"weight": 1, "sets": [0]}, {"weight": 0, "sets": [1]}]})");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.field() == "agents[1].weight");
  }
}

TEST_CASE("instance save is canonical and round-trips") {
  const Instance inst = load_instance(
      R"({"n": 3, "sets": [[2,0,0],[1]], "agents": [{"name": "x", "weight": 2, "sets": [1,0]}]})");
  const std::string text = save_instance(inst);
  CHECK(text == R"({"agents":[{"name":"x","sets":[0,1],"weight":2}],"n":3,"sets":[[0,2],[1]]})" "\n");
  CHECK(load_instance(text) == inst);
  CHECK(save_instance(load_instance(text)) == text);
}

TEST_CASE("unicode agent names round-trip") {
  const Instance inst =
      make_instance(2, {{0}, {1}}, {{"Zürich-Δ-東京", 1, {0}}, {"agent 🛰", 3, {1}}});
  const Instance back = load_instance(save_instance(inst));
  CHECK(back == inst);
  CHECK(back.agents[0].name == "Zürich-Δ-東京");
}

TEST_CASE("load-save identity on random and generated instances") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::random_instance(rng);
    CHECK(load_instance(save_instance(inst)) == inst);
    const Solution sol = greedy_solve(inst).solution;
    CHECK(load_solution(save_solution(sol)) == sol);
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = generate(corpus_spec(GenKind::kTraceroute, seed));
    CHECK(load_instance(save_instance(inst)) == inst);
  }
}

TEST_CASE("solution canonical form drops empty rounds") {
  const Solution sol = load_solution(
      R"({"rounds": 3, "objective": 1, "picked": [0, 1],
          "schedule": [[], [{"agent": 0, "sets": [0]}, {"agent": 1, "sets": []}], [], [{"agent": 1, "sets": [1]}]]})");
  REQUIRE(sol.schedule.size() == 2);
  CHECK(sol.schedule[0] == Round{{0, {0}}});
  CHECK(sol.schedule[1] == Round{{1, {1}}});
  CHECK(save_solution(sol) ==
        R"({"objective":1,"picked":[0,1],"rounds":3,"schedule":[[{"agent":0,"sets":[0]}],[{"agent":1,"sets":[1]}]]})" "\n");
}

TEST_CASE("load_solution rejects malformed values") {
  CHECK_THROWS_AS(load_solution(R"({"rounds": -1, "objective": 0, "picked": [], "schedule": []})"), Error);
  CHECK_THROWS_AS(load_solution(R"({"rounds": 1, "objective": 0, "picked": [0]})"), Error);
  CHECK_THROWS_AS(load_solution(R"({"rounds": 1, "objective": 0, "picked": [], "schedule": [[{"sets": []}]]})"), Error);
}

}  // namespace
}  // namespace vsc
