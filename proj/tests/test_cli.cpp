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

// Drives the vsc binary through its documented subcommands and exit codes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "vsc/io.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int status = -1;
  std::string out;
};

Result Run(const std::string& args) {
  const std::string cmd = std::string(VSC_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("vsc_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

TEST_CASE("solve prints a solution") {
  TempDir dir;
  const auto inst = dir.write("one.json", R"({"n":2,"sets":[[0,1]],"agents":[{"name":"a","weight":1,"sets":[0]}]})");
  const Result r = Run("solve " + inst + " --trace " + (dir.path / "t.jsonl").string());
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["rounds"] == 1);
  CHECK(j["picked"] == json::array({0}));
  std::ifstream trace(dir.path / "t.jsonl");
  std::string line;
  REQUIRE(std::getline(trace, line));
  CHECK(json::parse(line)["n_l"] == 0);
}

TEST_CASE("verify exit status follows the report") {
  TempDir dir;
  const auto inst = dir.write("i.json", R"({"n":2,"sets":[[0],[1]],"agents":[{"name":"a","weight":1,"sets":[0,1]}]})");
  const Result solved = Run("solve " + inst);
  REQUIRE(solved.status == 0);
  const auto good = dir.write("good.json", solved.out);
  Result v = Run("verify " + inst + " " + good);
  CHECK(v.status == 0);
  CHECK(json::parse(v.out)["ok"] == true);

  json tampered = json::parse(solved.out);
  tampered["objective"] = 1;
  const auto bad = dir.write("bad.json", tampered.dump());
  v = Run("verify " + inst + " " + bad);
  CHECK(v.status != 0);
  const json report = json::parse(v.out);
  CHECK(report["ok"] == false);
  CHECK(report["failures"][0]["check"] == "objective");
}

TEST_CASE("exact and baseline outputs") {
  TempDir dir;
  const auto inst = dir.write("i.json", R"({"n":2,"sets":[[0],[1]],"agents":[{"name":"a","weight":1,"sets":[0]},{"name":"b","weight":1,"sets":[1]}]})");
  Result r = Run("exact " + inst);
  CHECK(r.status == 0);
  CHECK(json::parse(r.out) == json::parse(R"({"opt":1,"witness":[0,1]})"));

  r = Run("exact " + inst + " --max-sets 1");
  CHECK(r.status == 3);
  CHECK(r.out.empty());

  r = Run("baseline " + inst);
  CHECK(r.status == 0);
  CHECK(json::parse(r.out) ==
        json::parse(R"({"baseline_objective":1,"vsc_objective":1,"vsc_rounds":1,"opt":1})"));

  r = Run("baseline " + inst + " --max-sets 1");
  CHECK(r.status == 0);
  CHECK(json::parse(r.out)["opt"].is_null());
}

TEST_CASE("gen is reproducible and loadable") {
  const std::string args = "gen --kind random --seed 1 --n 10 --k 6 --m 2 --size-min 1 --size-max 4 --weight-min 1 --weight-max 2";
  const Result a = Run(args);
  const Result b = Run(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK_NOTHROW(vsc::load_instance(a.out));

  for (const char* kind : {"traceroute", "decoy", "hub"}) {
    const Result t = Run(std::string("gen --kind ") + kind + " --seed 4");
    CHECK(t.status == 0);
    CHECK_NOTHROW(vsc::load_instance(t.out));
  }
  CHECK(Run("gen --kind random --seed 1 --n 3 --k 2 --m 3").status == 2);
}

TEST_CASE("usage and validation exit codes") {
  TempDir dir;
  CHECK(Run("").status == 1);
  CHECK(Run("frobnicate").status == 1);
  CHECK(Run("solve").status == 1);
  CHECK(Run("gen --kind nope").status == 1);
  CHECK(Run("solve " + (dir.path / "missing.json").string()).status == 2);
  const auto bad = dir.write("bad.json", R"({"n":2,"sets":[[0]],"agents":[{"weight":1,"sets":[0]}]})");
  CHECK(Run("solve " + bad).status == 2);
  const auto junk = dir.write("junk.json", "{");
  CHECK(Run("solve " + junk).status == 2);
}

TEST_CASE("bench over 100 seeds") {
  TempDir dir;
  const auto summary = (dir.path / "summary.json").string();
  const Result r = Run("bench --corpus-seeds 0..99 --kind random --jobs 2 --summary " + summary);
  CHECK(r.status == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 101);
  std::ifstream in(summary);
  const json s = json::parse(in);
  CHECK(s["instances"] == 100);
  CHECK(s["hard_violations"] == 0);
  CHECK(Run("bench --corpus-seeds 0..99 --kind random --jobs 2").out == r.out);
}

TEST_CASE("check-taylor") {
  const Result r = Run("check-taylor --max 1000000");
  CHECK(r.status == 0);
  CHECK(r.out == "true\n");
  CHECK(Run("check-taylor --max 1").status == 1);
}

}  // namespace
