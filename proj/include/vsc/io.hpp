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

#ifndef VSC_IO_HPP_
#define VSC_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"
#include "vsc/instance.hpp"
#include "vsc/solution.hpp"

namespace vsc {

// Instance file:
//   {"n": int, "sets": [[int,...],...],
//    "agents": [{"name": str, "weight": int, "sets": [int,...]},...]}
// plus an optional "element_labels": [str,...].
//
// Solution file:
//   {"rounds": int, "objective": int, "picked": [int,...],
//    "schedule": [[{"agent": int, "sets": [int,...]},...],...]}
//
// Saved forms are canonical: set members ascending, agent set lists
// ascending, no empty rounds or empty agent entries. Output is compact JSON
// followed by a newline.

Instance load_instance(std::istream& in);
Instance load_instance(std::string_view text);
Instance load_instance_file(const std::string& path);
std::string save_instance(const Instance& inst);

Solution load_solution(std::istream& in);
Solution load_solution(std::string_view text);
Solution load_solution_file(const std::string& path);
std::string save_solution(const Solution& sol);

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json solution_to_json(const Solution& sol);
Solution solution_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace vsc

#endif  // VSC_IO_HPP_
