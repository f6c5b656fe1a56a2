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

#ifndef CLIQUE_EXT_VERIFICATION_H_
#define CLIQUE_EXT_VERIFICATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace clique_ext {

// Outcome of an exhaustive check. Failures carry the first counterexample
// found; later ones are counted but not stored.
struct VerificationReport {
  VerificationReport() = default;
  explicit VerificationReport(std::string report_name)
      : name(std::move(report_name)) {}

  std::string name;
  std::uint64_t cases_checked = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> witness;

  bool passed() const { return failures == 0; }

  void fail(std::string what) {
    if (!witness) witness = std::move(what);
    ++failures;
  }

  // Folds another report's counts into this one, keeping the first witness.
  void absorb(const VerificationReport& other) {
    cases_checked += other.cases_checked;
    failures += other.failures;
    if (!witness && other.witness) {
      witness = other.name.empty() ? *other.witness
                                   : other.name + ": " + *other.witness;
    }
  }
};

}  // namespace clique_ext

#endif  // CLIQUE_EXT_VERIFICATION_H_
