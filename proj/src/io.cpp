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

#include "vsc/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "vsc/error.hpp"

namespace vsc {

using nlohmann::json;

namespace {

[[noreturn]] void SyntaxError(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::kSyntax, field, field.empty() ? what : field + ": " + what);
}

const json& Member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) SyntaxError(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

std::int64_t Integer(const json& j, const std::string& field) {
  if (!j.is_number_integer()) SyntaxError(field, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t Count(const json& j, const std::string& field) {
  const std::int64_t v = Integer(j, field);
  if (v < 0) SyntaxError(field, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

std::vector<std::int64_t> IntegerList(const json& j, const std::string& field) {
  if (!j.is_array()) SyntaxError(field, "expected an array of integers");
  std::vector<std::int64_t> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(Integer(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::size_t> IndexList(const json& j, const std::string& field) {
  if (!j.is_array()) SyntaxError(field, "expected an array of integers");
  std::vector<std::size_t> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(Count(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

json Parse(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    SyntaxError("", std::string("malformed JSON: ") + e.what());
  }
}

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    SyntaxError("", std::string("malformed JSON: ") + e.what());
  }
}

std::ifstream OpenFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) SyntaxError(path, "cannot open file");
  return in;
}

}  // namespace

Instance instance_from_json(const json& j) {
  if (!j.is_object()) SyntaxError("", "instance must be a JSON object");
  const std::int64_t n = Integer(Member(j, "n", ""), "n");
  const json& sets_j = Member(j, "sets", "");
  if (!sets_j.is_array()) SyntaxError("sets", "expected an array of arrays");
  std::vector<std::vector<std::int64_t>> sets;
  sets.reserve(sets_j.size());
  for (std::size_t s = 0; s < sets_j.size(); ++s)
    sets.push_back(IntegerList(sets_j[s], "sets[" + std::to_string(s) + "]"));

  const json& agents_j = Member(j, "agents", "");
  if (!agents_j.is_array()) SyntaxError("agents", "expected an array of objects");
  std::vector<AgentSpec> agents;
  for (std::size_t i = 0; i < agents_j.size(); ++i) {
    const std::string where = "agents[" + std::to_string(i) + "]";
    const json& a = agents_j[i];
    if (!a.is_object()) SyntaxError(where, "expected an object");
    AgentSpec spec;
    if (auto it = a.find("name"); it != a.end()) {
      if (!it->is_string()) SyntaxError(where + ".name", "expected a string");
      spec.name = it->get<std::string>();
    }
    spec.weight = Integer(Member(a, "weight", where), where + ".weight");
    spec.sets = IntegerList(Member(a, "sets", where), where + ".sets");
    agents.push_back(std::move(spec));
  }

  std::vector<std::string> labels;
  if (auto it = j.find("element_labels"); it != j.end()) {
    if (!it->is_array()) SyntaxError("element_labels", "expected an array of strings");
    for (const json& l : *it) {
      if (!l.is_string()) SyntaxError("element_labels", "expected an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return make_instance(n, sets, agents, std::move(labels));
}

json instance_to_json(const Instance& inst) {
  json sets = json::array();
  for (const ElementSet& s : inst.sets) sets.push_back(s.elements());
  json agents = json::array();
  for (std::size_t i = 0; i < inst.m(); ++i)
    agents.push_back({{"name", inst.agents[i].name},
                      {"weight", inst.agents[i].weight},
                      {"sets", inst.sets_of(i)}});
  json j = {{"n", inst.n}, {"sets", std::move(sets)}, {"agents", std::move(agents)}};
  if (!inst.element_labels.empty()) j["element_labels"] = inst.element_labels;
  return j;
}

Solution solution_from_json(const json& j) {
  if (!j.is_object()) SyntaxError("", "solution must be a JSON object");
  Solution sol;
  sol.rounds = Count(Member(j, "rounds", ""), "rounds");
  sol.objective = Count(Member(j, "objective", ""), "objective");
  sol.picked = IndexList(Member(j, "picked", ""), "picked");
  const json& sched = Member(j, "schedule", "");
  if (!sched.is_array()) SyntaxError("schedule", "expected an array of rounds");
  for (std::size_t r = 0; r < sched.size(); ++r) {
    const std::string where = "schedule[" + std::to_string(r) + "]";
    if (!sched[r].is_array()) SyntaxError(where, "expected an array");
    Round round;
    for (std::size_t e = 0; e < sched[r].size(); ++e) {
      const std::string entry = where + "[" + std::to_string(e) + "]";
      const json& ap = sched[r][e];
      if (!ap.is_object()) SyntaxError(entry, "expected an object");
      round.push_back({Count(Member(ap, "agent", entry), entry + ".agent"),
                       IndexList(Member(ap, "sets", entry), entry + ".sets")});
    }
    sol.schedule.push_back(std::move(round));
  }
  canonicalize(sol);
  return sol;
}

json solution_to_json(const Solution& sol) {
  Solution canon = sol;
  canonicalize(canon);
  json schedule = json::array();
  for (const Round& round : canon.schedule) {
    json r = json::array();
    for (const AgentPicks& ap : round) r.push_back({{"agent", ap.agent}, {"sets", ap.sets}});
    schedule.push_back(std::move(r));
  }
  return {{"rounds", canon.rounds},
          {"objective", canon.objective},
          {"picked", canon.picked},
          {"schedule", std::move(schedule)}};
}

json report_to_json(const VerificationReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) failures.push_back({{"check", f.check}, {"detail", f.detail}});
  return {{"ok", report.ok()}, {"failures", std::move(failures)}};
}

Instance load_instance(std::istream& in) { return instance_from_json(Parse(in)); }
Instance load_instance(std::string_view text) { return instance_from_json(Parse(text)); }
Instance load_instance_file(const std::string& path) {
  auto in = OpenFile(path);
  return load_instance(in);
}
std::string save_instance(const Instance& inst) { return instance_to_json(inst).dump() + "\n"; }

Solution load_solution(std::istream& in) { return solution_from_json(Parse(in)); }
Solution load_solution(std::string_view text) { return solution_from_json(Parse(text)); }
Solution load_solution_file(const std::string& path) {
  auto in = OpenFile(path);
  return load_solution(in);
}
std::string save_solution(const Solution& sol) { return solution_to_json(sol).dump() + "\n"; }

}  // namespace vsc
