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

#ifndef VSC_ERROR_HPP_
#define VSC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace vsc {

enum class ErrorKind {
  kSyntax,     // malformed input text or wrong JSON shape
  kPartition,  // a set with zero or several owners, or a bad owner index
  kWeight,     // agent weight < 1
  kRange,      // element index >= n
  kCoverage,   // union of the sets is not the universe
  kIndex,      // set index out of range in a pick list
  kDuplicate,  // repeated set index in a pick list
  kSpec,       // unsatisfiable generator / limits parameters
  kInternal,   // broken internal invariant
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string field, const std::string& message)
      : std::runtime_error(message), kind_(kind), field_(std::move(field)) {}

  ErrorKind kind() const { return kind_; }
  // Name of the offending input field, empty when not applicable.
  const std::string& field() const { return field_; }

 private:
  ErrorKind kind_;
  std::string field_;
};

}  // namespace vsc

#endif  // VSC_ERROR_HPP_
