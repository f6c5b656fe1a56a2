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

#ifndef CLIQUE_EXT_CRAPO_EXTENSION_H_
#define CLIQUE_EXT_CRAPO_EXTENSION_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clique_ext/clique_matroid.h"
#include "clique_ext/linear_family.h"
#include "clique_ext/run_options.h"
#include "clique_ext/verification.h"

// Single-element extensions of M(K_{n+1}) built from linear subclasses via
// modular cuts.
namespace clique_ext {

// Matroid-side closure rule: returns a rank-(n-2) flat that lies in two
// members of `hyperplanes` but also in a non-member, or nothing if the
// set is a linear subclass.
std::optional<VertexPartition> linear_subclass_violation(
    GroundScale n, const std::vector<Hyperplane>& hyperplanes);

class LinearSubclass {
 public:
  // Throws ContractViolation when the closure rule fails.
  static LinearSubclass from_hyperplanes(GroundScale n,
                                         std::vector<Hyperplane> hyperplanes);

  GroundScale scale() const { return scale_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  std::size_t size() const { return hyperplanes_.size(); }
  bool contains(const VertexPartition& two_partition) const {
    return index_.contains(two_partition);
  }

 private:
  LinearSubclass(GroundScale n, std::vector<Hyperplane> hyperplanes);

  GroundScale scale_;
  std::vector<Hyperplane> hyperplanes_;
  std::set<VertexPartition> index_;
};

// psi^{-1} applied member-wise, without any validation.
std::vector<Hyperplane> hyperplane_image(const SetFamily& b);

// Throws ContractViolation for a non-linear b.
LinearSubclass subclass_from_family(const SetFamily& b);

// A set of flats of M(K_{n+1}), stored as partitions.
class ModularCut {
 public:
  ModularCut(GroundScale n, std::vector<VertexPartition> flats);

  GroundScale scale() const { return scale_; }
  const std::set<VertexPartition>& flats() const { return flats_; }
  std::size_t size() const { return flats_.size(); }
  bool contains(const VertexPartition& flat) const {
    return flats_.contains(flat);
  }
  // psi-images of the hyperplanes in the cut, ascending by word.
  std::vector<SubsetWord> hyperplane_images() const;

  friend bool operator==(const ModularCut& a, const ModularCut& b) {
    return a.scale_ == b.scale_ && a.flats_ == b.flats_;
  }

 private:
  GroundScale scale_;
  std::set<VertexPartition> flats_;
};

// Up-closure and closure under intersections of modular pairs.
VerificationReport check_modular_cut(const ModularCut& cut);

// All flats F such that every hyperplane containing F is in h. The whole
// edge set is always a member.
ModularCut generate_modular_cut(const LinearSubclass& h);

// Smallest modular cut containing `flats`: up-closure and meets of modular
// pairs, iterated to a fixpoint. Agrees with generate_modular_cut on linear
// subclasses; on any other hyperplane set it picks up extra hyperplanes.
ModularCut modular_cut_closure(GroundScale n,
                               const std::vector<VertexPartition>& flats);

enum class ElementClass { kLoop, kColoop, kOrdinary };
std::string_view to_string(ElementClass c);

// M(K_{n+1}) plus one element e. Subsets of the ground set are words: bit s
// is the edge in slot s (lexicographic pair order), bit edge_count() is e.
class ExtensionMatroid {
 public:
  // Throws ResourceLimitError when the ground set needs more than 63 bits.
  explicit ExtensionMatroid(ModularCut cut);

  GroundScale scale() const { return cut_.scale(); }
  const ModularCut& cut() const { return cut_; }
  int edge_count() const { return edge_count_; }
  int ground_size() const { return edge_count_ + 1; }
  int new_element() const { return edge_count_; }

  // rank_M(a) without e; with e, rank_M(a - e) plus one unless
  // cl_M(a - e) is in the cut.
  int rank(std::uint64_t subset) const;
  // Ranks of every subset in increasing word order. Throws
  // ResourceLimitError beyond 20 ground elements.
  std::vector<std::uint8_t> rank_table() const;

 private:
  ModularCut cut_;
  int edge_count_;
  std::vector<std::pair<int, int>> slot_edges_;
};

inline int extension_rank(const ExtensionMatroid& x, std::uint64_t subset) {
  return x.rank(subset);
}

using RankOracle = std::function<int(std::uint64_t)>;

// Sweeps every subset: 0 <= r(A) <= |A|, monotonicity, submodularity.
// Monotonicity and submodularity are checked in their single-element
// forms, which are equivalent; a submodularity witness is reported as the
// pair (A+x, A+y). Throws ResourceLimitError for more than 16 elements.
VerificationReport verify_matroid_axioms(const RankOracle& rank,
                                         int ground_size);

struct DeletionCheck {
  VerificationReport report;
  ElementClass e_class = ElementClass::kOrdinary;
};

// Compares the extension against an independent cycle-matroid rank on
// every edge subset, and classifies e.
DeletionCheck deletion_check(const ExtensionMatroid& x);

// Edges f with r({e, f}) = 1 = r({e}).
std::vector<std::pair<int, int>> parallel_edges(const ExtensionMatroid& x);

// 64-bit FNV-1a over the bytes of a rank table.
std::uint64_t rank_table_hash(std::span<const std::uint8_t> table);

struct ExtensionRecord {
  SetFamily family;
  ExtensionMatroid matroid;
  ElementClass e_class;
  std::uint64_t rank_table_hash;
};

struct ExtensionEnumeration {
  GroundScale scale;
  std::vector<ExtensionRecord> extensions;
  BigInt expected_count;  // count_linear(n)
  // Axioms, deletion, e never a coloop, pairwise distinct rank tables, and
  // the total against count_linear(n).
  VerificationReport report;
};

// One extension per linear family of P(n), in enumeration order. Caps:
// n+1 <= 5, or n+1 <= 6 with options.force.
ExtensionEnumeration enumerate_extensions(GroundScale n,
                                          const RunOptions& options = {});

// {"scale", "cut", "e_class", "rank_table_hash"} for one extension; the hash
// is 16 lowercase hex digits.
std::string extension_json(const ExtensionRecord& record);
// The whole enumeration as one JSON document.
std::string extensions_json(const ExtensionEnumeration& all);

// Over every set of hyperplanes of M(K_{n+1}): the set obeys the closure
// rule iff its psi-image is linear; for linear ones the generated cut is a
// modular cut, equals modular_cut_closure, and has exactly the input as its
// hyperplanes. For n <= 3 it also checks that the modular-cut closure of a
// non-linear input has more hyperplanes than the input. Capped at n <= 4.
VerificationReport verify_subclass_correspondence(
    GroundScale n, const RunOptions& options = {});

}  // namespace clique_ext

#endif  // CLIQUE_EXT_CRAPO_EXTENSION_H_
