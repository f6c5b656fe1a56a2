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

#include "clique_ext/run_options.h"

#include <cstdlib>
#include <string>

#include "clique_ext/errors.h"

namespace clique_ext {

void RunOptions::apply_time_budget_from_environment() {
  const char* raw = std::getenv("CLIQUE_EXT_TIME_BUDGET_SECS");
  if (raw == nullptr || *raw == '\0') return;
  char* end = nullptr;
  const double secs = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(secs > 0)) {
    throw InputError(std::string("CLIQUE_EXT_TIME_BUDGET_SECS must be a "
                                 "positive number of seconds, got '") +
                     raw + "'");
  }
  deadline = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(secs));
}

void DeadlineProbe::check_now() const {
  if (std::chrono::steady_clock::now() > *deadline_) {
    throw ResourceLimitError("time budget exceeded in " + what_ + " after " +
                             std::to_string(ticks_) + " search nodes");
  }
}

}  // namespace clique_ext
