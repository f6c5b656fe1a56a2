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

#ifndef CLIQUE_EXT_ANTICHAIN_ENGINE_H_
#define CLIQUE_EXT_ANTICHAIN_ENGINE_H_

#include <array>
#include <cstdint>
#include <vector>

#include "clique_ext/linear_family.h"
#include "clique_ext/run_options.h"
#include "clique_ext/subset_core.h"
#include "clique_ext/verification.h"

namespace clique_ext {

bool is_antichain(const SetFamily& b);
// Antichain whose members pairwise intersect.
bool is_intersecting_antichain(const SetFamily& b);

// Checks, over every subfamily of P(n) \ {∅}, that the triple-based
// scarcity test and the pairwise intersecting-antichain test agree.
// Caps: n <= 4, or n <= 5 with options.force.
VerificationReport scarce_equivalence_check(GroundScale n,
                                            const RunOptions& options = {});

// Simple graph on at most 128 vertices, each tagged with a subset of [n].
class ConflictGraph {
 public:
  static constexpr int kMaxVertices = 128;
  using VertexSet = std::array<std::uint64_t, 2>;

  // Nonempty subsets of [n]; edges join comparable or disjoint pairs.
  // Independent sets are exactly the intersecting antichains.
  static ConflictGraph intersecting(GroundScale n);
  // All subsets of [n], the empty set included; edges join comparable
  // pairs. Independent sets are exactly the antichains of P(n).
  static ConflictGraph comparability(GroundScale n);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  SubsetWord label(int v) const { return labels_[v]; }
  bool adjacent(int u, int v) const {
    return (adjacency_[u][v / 64] >> (v % 64)) & 1U;
  }
  const VertexSet& neighbours(int v) const { return adjacency_[v]; }

 private:
  ConflictGraph(std::vector<SubsetWord> labels, bool disjoint_conflicts);

  std::vector<SubsetWord> labels_;
  std::vector<VertexSet> adjacency_;
};

// Exact number of independent sets (the empty set included). Branches on
// a maximum-degree vertex, multiplies over connected components, and
// memoizes residual vertex sets in a table shared by all workers.
BigInt count_independent_sets(const ConflictGraph& graph,
                              const RunOptions& options = {});

// |A_I(n)|, the empty family included. Caps: n <= 6, or n <= 7 with force.
BigInt count_intersecting_antichains(GroundScale n,
                                     const RunOptions& options = {});
// Antichains of all of P(n), counting both {} and {∅} (the Dedekind number
// convention). Caps: n <= 6, or n <= 7 with force (n = 7 needs 128
// vertices and is slow).
BigInt count_antichains(GroundScale n, const RunOptions& options = {});

// All subsets of size floor(n/2) + 1.
SetFamily middle_layer_family(GroundScale n);

}  // namespace clique_ext

#endif  // CLIQUE_EXT_ANTICHAIN_ENGINE_H_
