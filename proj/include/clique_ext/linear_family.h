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

#ifndef CLIQUE_EXT_LINEAR_FAMILY_H_
#define CLIQUE_EXT_LINEAR_FAMILY_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "clique_ext/run_options.h"
#include "clique_ext/subset_core.h"
#include "clique_ext/verification.h"

namespace clique_ext {

// A family of distinct nonempty subsets of [n], kept sorted by word value.
class SetFamily {
 public:
  explicit SetFamily(GroundScale n) : scale_(n) {}
  // Throws InputError for empty, duplicate or out-of-range members.
  SetFamily(GroundScale n, std::vector<SubsetWord> members);

  GroundScale scale() const { return scale_; }
  const std::vector<SubsetWord>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(SubsetWord s) const;

  // Members of the family as bits of a word indexed by subset value
  // (bit w set iff the subset with word w is a member). Requires n <= 6.
  std::uint64_t membership_mask() const;
  static SetFamily from_membership_mask(GroundScale n, std::uint64_t mask);

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.scale_ == b.scale_ && a.members_ == b.members_;
  }
  friend std::strong_ordering operator<=>(const SetFamily& a,
                                          const SetFamily& b) {
    if (auto c = a.scale_.n() <=> b.scale_.n(); c != 0) return c;
    return a.members_ <=> b.members_;
  }

  // "{{1},{1,2}}"
  std::string to_string() const;

 private:
  GroundScale scale_;
  std::vector<SubsetWord> members_;
};

enum class FamilyKind { kLinear, kScarce };

// A related triple meeting b in exactly 2 members (linear) or in 2 or more
// (scarce), or nothing when b has the property. Triples are scanned
// directly from the definition.
std::optional<RelatedTriple> violating_triple(const SetFamily& b,
                                              FamilyKind kind);

inline bool is_linear(const SetFamily& b) {
  return !violating_triple(b, FamilyKind::kLinear);
}
inline bool is_scarce(const SetFamily& b) {
  return !violating_triple(b, FamilyKind::kScarce);
}

// Simultaneously removes the precedence-least and precedence-greatest
// member of every related triple contained in b. Throws ContractViolation
// for a non-linear b.
SetFamily phi_compress(const SetFamily& b);

struct FiberKey {
  SetFamily compressed;
  std::vector<SubsetWord> small_trace;  // b intersected with S(n)

  friend bool operator==(const FiberKey&, const FiberKey&) = default;
  friend std::strong_ordering operator<=>(const FiberKey& a,
                                          const FiberKey& b) {
    if (auto c = a.compressed <=> b.compressed; c != 0) return c;
    return a.small_trace <=> b.small_trace;
  }
};

FiberKey fiber_key(const SetFamily& b);

// Depth-first search over P(n) \ {∅} in precedence order. Linear mode
// decides each set once the last member of each of its triples is
// reached; scarce mode rejects a set as soon as it shares a triple with an
// earlier member. Feasibility caps: n <= 5, or n <= 6 with options.force.
void enumerate_families(GroundScale n, FamilyKind kind,
                        const std::function<void(const SetFamily&)>& visit,
                        const RunOptions& options = {});
inline void enumerate_linear(GroundScale n,
                             const std::function<void(const SetFamily&)>& visit,
                             const RunOptions& options = {}) {
  enumerate_families(n, FamilyKind::kLinear, visit, options);
}

// Exact count of the families visited by enumerate_families. Work is split
// into independent subtrees when options.threads > 1.
BigInt count_families(GroundScale n, FamilyKind kind,
                      const RunOptions& options = {});
inline BigInt count_linear(GroundScale n, const RunOptions& options = {}) {
  return count_families(n, FamilyKind::kLinear, options);
}
inline BigInt count_scarce(GroundScale n, const RunOptions& options = {}) {
  return count_families(n, FamilyKind::kScarce, options);
}

// Ground-truth oracle: tests `predicate` on all 2^(2^n - 1) subfamilies of
// P(n) \ {∅}. Caps: n <= 4, or n <= 5 with options.force.
BigInt brute_force_families(GroundScale n,
                            const std::function<bool(const SetFamily&)>& predicate,
                            const RunOptions& options = {});

// Exhaustive check of the compression map over every linear family:
// phi(b) is scarce and inside b, phi fixes scarce families, removed members
// are in S(n) or are the top of a contained triple, the bottom of every
// contained triple is in S(n), fiber keys are pairwise distinct, and
// |Q(n)| <= |Q_s(n)| * 2^|S(n)|. Caps: n <= 4, or n <= 5 with force.
VerificationReport verify_phi_properties(GroundScale n,
                                         const RunOptions& options = {});

// Family files: one family per line, members as hex words joined by ','.
// A blank line is the empty family; lines starting with '#' are comments.
std::string family_line(const SetFamily& b);
// Throws InputError on malformed members.
SetFamily parse_family_line(GroundScale n, const std::string& line);
// Comment lines are skipped; every other line is one family.
std::vector<SetFamily> read_family_file(GroundScale n, std::istream& in);

}  // namespace clique_ext

#endif  // CLIQUE_EXT_LINEAR_FAMILY_H_
