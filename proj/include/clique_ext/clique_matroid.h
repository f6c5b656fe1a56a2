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

#ifndef CLIQUE_EXT_CLIQUE_MATROID_H_
#define CLIQUE_EXT_CLIQUE_MATROID_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "clique_ext/subset_core.h"
#include "clique_ext/verification.h"

// The cycle matroid M(K_{n+1}). Vertices are 1..n+1 and vertex n+1 is the
// apex used by psi.
namespace clique_ext {

// Edge set of K_V stored as a characteristic word over the C(V,2) edge
// slots, pairs in lexicographic order: 12, 13, ..., 1V, 23, ...
class EdgeSet {
 public:
  static constexpr int kMaxVertices = GroundScale::kMax + 1;

  // Empty edge set on V vertices; throws InputError unless 2 <= V <= 65.
  explicit EdgeSet(int vertex_count);
  static EdgeSet complete(int vertex_count);
  static EdgeSet of(int vertex_count,
                    std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const { return vertex_count_; }
  int slot_count() const { return vertex_count_ * (vertex_count_ - 1) / 2; }
  // Slot of edge {i, j}, 1 <= i < j <= V.
  static int slot(int vertex_count, int i, int j);
  std::pair<int, int> edge_at(int slot) const;

  bool contains(int i, int j) const;
  bool contains_slot(int s) const { return (words_[s / 64] >> (s % 64)) & 1U; }
  void insert(int i, int j);
  void insert_slot(int s) { words_[s / 64] |= std::uint64_t{1} << (s % 64); }
  void erase_slot(int s) { words_[s / 64] &= ~(std::uint64_t{1} << (s % 64)); }

  int size() const;
  bool empty() const { return size() == 0; }
  bool is_subset_of(const EdgeSet& other) const;
  std::vector<std::pair<int, int>> edges() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend EdgeSet operator&(const EdgeSet& a, const EdgeSet& b);
  friend EdgeSet operator|(const EdgeSet& a, const EdgeSet& b);
  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

  // "12,34". Pairs are written as "i-j" once any vertex exceeds 9.
  std::string to_string() const;

 private:
  int vertex_count_;
  std::vector<std::uint64_t> words_;
};

// Unordered partition of [V], canonical: blocks are numbered in order of
// their minimum element, so equal partitions compare equal structurally.
class VertexPartition {
 public:
  // The partition into singletons.
  static VertexPartition discrete(int vertex_count);
  // The one-block partition.
  static VertexPartition whole(int vertex_count);
  // labels[v-1] names the block of vertex v; any labelling is accepted.
  static VertexPartition from_labels(const std::vector<int>& labels);
  // Throws InputError unless the parts are disjoint, nonempty and cover
  // [vertex_count].
  static VertexPartition from_parts(const std::vector<std::vector<int>>& parts,
                                    int vertex_count);

  int vertex_count() const { return static_cast<int>(block_.size()); }
  int part_count() const { return part_count_; }
  int block_of(int vertex) const { return block_[vertex - 1]; }
  std::vector<std::vector<int>> parts() const;

  // True iff every block of *this lies inside a block of coarser.
  bool refines(const VertexPartition& coarser) const;

  friend bool operator==(const VertexPartition&,
                         const VertexPartition&) = default;
  friend std::strong_ordering operator<=>(const VertexPartition& a,
                                          const VertexPartition& b) {
    return a.block_ <=> b.block_;
  }

  // "{1,2|3|4,5}"
  std::string to_string() const;

 private:
  explicit VertexPartition(std::vector<std::uint8_t> block, int part_count)
      : block_(std::move(block)), part_count_(part_count) {}

  std::vector<std::uint8_t> block_;
  int part_count_;
};

// (n+1) minus the number of components of ([n+1], a), isolated vertices
// included.
int rank(const EdgeSet& a);

VertexPartition components(const EdgeSet& a);
EdgeSet closure(const EdgeSet& a);
bool is_flat(const EdgeSet& a);

// Partition <-> flat converters. partition_of_flat throws InputError when
// the edge set is not a flat.
EdgeSet flat_of(const VertexPartition& p);
VertexPartition partition_of_flat(const EdgeSet& flat);

// Rank of the flat of p: V - part_count.
inline int flat_rank(const VertexPartition& p) {
  return p.vertex_count() - p.part_count();
}

// Every k-partition of [n+1] (the rank-(n+1-k) flats), each once.
void for_each_partition(int vertex_count, int parts,
                        const std::function<void(const VertexPartition&)>& fn);
std::vector<VertexPartition> flats(int k_parts, GroundScale n);
// All flats of M(K_{n+1}); Bell(n+1) of them. Throws ResourceLimitError
// when n+1 > 10.
std::vector<VertexPartition> all_flats(GroundScale n);

// Common refinement: the flat f intersect g.
VertexPartition intersect_flats(const VertexPartition& f,
                                const VertexPartition& g);
// Finest common coarsening: the flat closure(f u g).
VertexPartition join_flats(const VertexPartition& f, const VertexPartition& g);

struct Hyperplane {
  EdgeSet flat;
  VertexPartition partition;

  // Throws InputError unless p has exactly two parts.
  static Hyperplane from_partition(const VertexPartition& p);

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.partition == b.partition;
  }
};

// The block of h not containing the apex n+1.
SubsetWord psi(const Hyperplane& h, GroundScale n);
// Hyperplane with partition {x, [n+1] \ x}. Throws InputError for empty x
// or x not inside [n].
Hyperplane psi_inverse(SubsetWord x, GroundScale n);

// psi-images of the 2^(k-1) - 1 hyperplanes containing the flat f: unions
// of nonempty collections of the blocks that avoid the apex.
std::vector<SubsetWord> psi_of_hyperplanes_containing(const VertexPartition& f);
std::vector<Hyperplane> hyperplanes_containing(const VertexPartition& f);

// For each 3-partition flat: exactly three hyperplanes contain it and their
// psi-images form a related triple. For each disjoint nonempty S, T: the
// three psi-preimages meet in a flat of rank n-2. Throws ResourceLimitError
// when n+1 > 8.
VerificationReport verify_triple_claim(GroundScale n);

}  // namespace clique_ext

template <>
struct std::hash<clique_ext::EdgeSet> {
  std::size_t operator()(const clique_ext::EdgeSet& e) const noexcept {
    std::size_t h = static_cast<std::size_t>(e.vertex_count());
    for (std::uint64_t w : e.words()) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

#endif  // CLIQUE_EXT_CLIQUE_MATROID_H_
