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

#ifndef CLIQUE_EXT_RUN_OPTIONS_H_
#define CLIQUE_EXT_RUN_OPTIONS_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace clique_ext {

// Knobs shared by the exhaustive enumerators and counters. Results never
// depend on `threads` or `split_depth`.
struct RunOptions {
  unsigned threads = 1;
  // Lift the documented feasibility caps up to the hard representation
  // limits.
  bool force = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // Number of leading decisions expanded into independent subtasks when
  // threads > 1. Negative picks a default.
  int split_depth = -1;

  // Reads CLIQUE_EXT_TIME_BUDGET_SECS, if set, into a deadline from now.
  // Throws InputError for a malformed value.
  void apply_time_budget_from_environment();
};

// Cheap periodic deadline probe for hot loops.
class DeadlineProbe {
 public:
  explicit DeadlineProbe(const RunOptions& options, std::string what)
      : deadline_(options.deadline), what_(std::move(what)) {}

  // Throws ResourceLimitError once the deadline has passed. Only consults
  // the clock every 2^16 calls.
  void tick() {
    if (!deadline_ || (++ticks_ & 0xFFFF) != 0) return;
    check_now();
  }
  std::uint64_t ticks() const { return ticks_; }

 private:
  void check_now() const;

  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::string what_;
  std::uint64_t ticks_ = 0;
};

}  // namespace clique_ext

#endif  // CLIQUE_EXT_RUN_OPTIONS_H_
