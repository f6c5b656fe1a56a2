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

#ifndef CLIQUE_EXT_ERRORS_H_
#define CLIQUE_EXT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace clique_ext {

// Malformed arguments: out-of-range scale, empty subset where one is
// required, unknown format names.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A precondition on a mathematical object failed, e.g. phi applied to a
// family that is not linear.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The requested scale is beyond a feasibility cap, or a time budget ran out.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace clique_ext

#endif  // CLIQUE_EXT_ERRORS_H_
