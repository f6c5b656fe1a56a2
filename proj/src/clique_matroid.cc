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

#include "clique_ext/clique_matroid.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "clique_ext/errors.h"

namespace clique_ext {
namespace {

void check_vertex_count(int v) {
  if (v < 2 || v > EdgeSet::kMaxVertices) {
    throw InputError("vertex count must lie in [2, 65], got " +
                     std::to_string(v));
  }
}

// Union-find over vertices 0..V-1.
class DisjointSets {
 public:
  explicit DisjointSets(int size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

EdgeSet::EdgeSet(int vertex_count) : vertex_count_(vertex_count) {
  check_vertex_count(vertex_count);
  words_.assign((slot_count() + 63) / 64, 0);
}

EdgeSet EdgeSet::complete(int vertex_count) {
  EdgeSet e(vertex_count);
  for (int s = 0; s < e.slot_count(); ++s) e.insert_slot(s);
  return e;
}

EdgeSet EdgeSet::of(int vertex_count,
                    std::initializer_list<std::pair<int, int>> edges) {
  EdgeSet e(vertex_count);
  for (auto [i, j] : edges) e.insert(i, j);
  return e;
}

int EdgeSet::slot(int vertex_count, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > vertex_count || i == j) {
    throw InputError("edge {" + std::to_string(i) + "," + std::to_string(j) +
                     "} is not an edge of K_" + std::to_string(vertex_count));
  }
  // Edges starting at a < i come first; vertex a has V - a of them.
  const int before = (i - 1) * vertex_count - (i - 1) * i / 2;
  return before + (j - i - 1);
}

std::pair<int, int> EdgeSet::edge_at(int s) const {
  int i = 1;
  while (s >= vertex_count_ - i) {
    s -= vertex_count_ - i;
    ++i;
  }
  return {i, i + 1 + s};
}

bool EdgeSet::contains(int i, int j) const {
  return contains_slot(slot(vertex_count_, i, j));
}

void EdgeSet::insert(int i, int j) { insert_slot(slot(vertex_count_, i, j)); }

int EdgeSet::size() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if ((words_[k] & ~other.words_[k]) != 0) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> EdgeSet::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s < slot_count(); ++s) {
    if (contains_slot(s)) out.push_back(edge_at(s));
  }
  return out;
}

EdgeSet operator&(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out = a;
  for (std::size_t k = 0; k < out.words_.size(); ++k) {
    out.words_[k] &= b.words_[k];
  }
  return out;
}

EdgeSet operator|(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out = a;
  for (std::size_t k = 0; k < out.words_.size(); ++k) {
    out.words_[k] |= b.words_[k];
  }
  return out;
}

std::string EdgeSet::to_string() const {
  const bool compact = vertex_count_ <= 9;
  std::string out;
  for (auto [i, j] : edges()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
    if (!compact) out += '-';
    out += std::to_string(j);
  }
  return out;
}

VertexPartition VertexPartition::discrete(int vertex_count) {
  check_vertex_count(vertex_count);
  std::vector<std::uint8_t> block(vertex_count);
  std::iota(block.begin(), block.end(), 0);
  return VertexPartition(std::move(block), vertex_count);
}

VertexPartition VertexPartition::whole(int vertex_count) {
  check_vertex_count(vertex_count);
  return VertexPartition(std::vector<std::uint8_t>(vertex_count, 0), 1);
}

VertexPartition VertexPartition::from_labels(const std::vector<int>& labels) {
  check_vertex_count(static_cast<int>(labels.size()));
  std::vector<std::uint8_t> block(labels.size());
  std::vector<std::pair<int, int>> seen;  // (label, canonical id)
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& p) { return p.first == labels[v]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[v], static_cast<int>(seen.size()));
      block[v] = static_cast<std::uint8_t>(seen.size() - 1);
    } else {
      block[v] = static_cast<std::uint8_t>(it->second);
    }
  }
  return VertexPartition(std::move(block), static_cast<int>(seen.size()));
}

VertexPartition VertexPartition::from_parts(
    const std::vector<std::vector<int>>& parts, int vertex_count) {
  check_vertex_count(vertex_count);
  std::vector<int> labels(vertex_count, -1);
  for (std::size_t b = 0; b < parts.size(); ++b) {
    if (parts[b].empty()) throw InputError("partition has an empty part");
    for (int v : parts[b]) {
      if (v < 1 || v > vertex_count) {
        throw InputError("partition vertex out of range: " +
                         std::to_string(v));
      }
      if (labels[v - 1] != -1) {
        throw InputError("partition parts overlap at vertex " +
                         std::to_string(v));
      }
      labels[v - 1] = static_cast<int>(b);
    }
  }
  if (std::find(labels.begin(), labels.end(), -1) != labels.end()) {
    throw InputError("partition parts do not cover every vertex");
  }
  return from_labels(labels);
}

std::vector<std::vector<int>> VertexPartition::parts() const {
  std::vector<std::vector<int>> out(part_count_);
  for (int v = 1; v <= vertex_count(); ++v) out[block_of(v)].push_back(v);
  return out;
}

bool VertexPartition::refines(const VertexPartition& coarser) const {
  // Each block of *this maps into a single block of coarser.
  std::vector<int> image(part_count_, -1);
  for (int v = 1; v <= vertex_count(); ++v) {
    int& target = image[block_of(v)];
    if (target == -1) {
      target = coarser.block_of(v);
    } else if (target != coarser.block_of(v)) {
      return false;
    }
  }
  return true;
}

std::string VertexPartition::to_string() const {
  std::string out = "{";
  bool first_part = true;
  for (const auto& part : parts()) {
    if (!first_part) out += '|';
    first_part = false;
    for (std::size_t k = 0; k < part.size(); ++k) {
      if (k != 0) out += ',';
      out += std::to_string(part[k]);
    }
  }
  out += '}';
  return out;
}

VertexPartition components(const EdgeSet& a) {
  DisjointSets sets(a.vertex_count());
  for (auto [i, j] : a.edges()) sets.unite(i - 1, j - 1);
  std::vector<int> labels(a.vertex_count());
  for (int v = 0; v < a.vertex_count(); ++v) labels[v] = sets.find(v);
  return VertexPartition::from_labels(labels);
}

int rank(const EdgeSet& a) {
  DisjointSets sets(a.vertex_count());
  int r = 0;
  for (auto [i, j] : a.edges()) {
    if (sets.unite(i - 1, j - 1)) ++r;
  }
  return r;
}

EdgeSet flat_of(const VertexPartition& p) {
  EdgeSet e(p.vertex_count());
  for (int i = 1; i <= p.vertex_count(); ++i) {
    for (int j = i + 1; j <= p.vertex_count(); ++j) {
      if (p.block_of(i) == p.block_of(j)) e.insert(i, j);
    }
  }
  return e;
}

EdgeSet closure(const EdgeSet& a) { return flat_of(components(a)); }

bool is_flat(const EdgeSet& a) { return closure(a) == a; }

VertexPartition partition_of_flat(const EdgeSet& flat) {
  VertexPartition p = components(flat);
  if (flat_of(p) != flat) {
    throw InputError("edge set " + flat.to_string() + " is not a flat");
  }
  return p;
}

void for_each_partition(int vertex_count, int parts,
                        const std::function<void(const VertexPartition&)>& fn) {
  check_vertex_count(vertex_count);
  if (parts < 1 || parts > vertex_count) {
    throw InputError("part count must lie in [1, " +
                     std::to_string(vertex_count) + "]");
  }
  // Restricted growth strings with exactly `parts` distinct labels.
  std::vector<int> labels(vertex_count, 0);
  std::function<void(int, int)> extend = [&](int v, int used) {
    const int remaining = vertex_count - v;
    if (used + remaining < parts) return;
    if (v == vertex_count) {
      fn(VertexPartition::from_labels(labels));
      return;
    }
    for (int b = 0; b <= used && b < parts; ++b) {
      labels[v] = b;
      extend(v + 1, std::max(used, b + 1));
    }
  };
  labels[0] = 0;
  extend(1, 1);
}

std::vector<VertexPartition> flats(int k_parts, GroundScale n) {
  std::vector<VertexPartition> out;
  for_each_partition(n.vertex_count(), k_parts,
                     [&out](const VertexPartition& p) { out.push_back(p); });
  return out;
}

std::vector<VertexPartition> all_flats(GroundScale n) {
  if (n.vertex_count() > 10) {
    throw ResourceLimitError("listing all flats of M(K_" +
                             std::to_string(n.vertex_count()) +
                             ") is beyond the Bell-number cap (n+1 <= 10)");
  }
  std::vector<VertexPartition> out;
  for (int k = 1; k <= n.vertex_count(); ++k) {
    for_each_partition(n.vertex_count(), k,
                       [&out](const VertexPartition& p) { out.push_back(p); });
  }
  return out;
}

VertexPartition intersect_flats(const VertexPartition& f,
                                const VertexPartition& g) {
  if (f.vertex_count() != g.vertex_count()) {
    throw InputError("partitions over different vertex sets");
  }
  std::vector<int> labels(f.vertex_count());
  for (int v = 1; v <= f.vertex_count(); ++v) {
    labels[v - 1] = f.block_of(v) * EdgeSet::kMaxVertices + g.block_of(v);
  }
  return VertexPartition::from_labels(labels);
}

VertexPartition join_flats(const VertexPartition& f, const VertexPartition& g) {
  if (f.vertex_count() != g.vertex_count()) {
    throw InputError("partitions over different vertex sets");
  }
  DisjointSets sets(f.vertex_count());
  std::vector<int> f_first(f.part_count(), -1);
  std::vector<int> g_first(g.part_count(), -1);
  for (int v = 0; v < f.vertex_count(); ++v) {
    int& fr = f_first[f.block_of(v + 1)];
    if (fr == -1) fr = v; else sets.unite(fr, v);
    int& gr = g_first[g.block_of(v + 1)];
    if (gr == -1) gr = v; else sets.unite(gr, v);
  }
  std::vector<int> labels(f.vertex_count());
  for (int v = 0; v < f.vertex_count(); ++v) labels[v] = sets.find(v);
  return VertexPartition::from_labels(labels);
}

Hyperplane Hyperplane::from_partition(const VertexPartition& p) {
  if (p.part_count() != 2) {
    throw InputError("a hyperplane needs a 2-partition, got " + p.to_string());
  }
  return Hyperplane{flat_of(p), p};
}

SubsetWord psi(const Hyperplane& h, GroundScale n) {
  if (h.partition.vertex_count() != n.vertex_count() ||
      h.partition.part_count() != 2) {
    throw InputError("psi expects a hyperplane of M(K_" +
                     std::to_string(n.vertex_count()) + ")");
  }
  const int apex_block = h.partition.block_of(n.vertex_count());
  std::uint64_t bits = 0;
  for (int v = 1; v <= n.n(); ++v) {
    if (h.partition.block_of(v) != apex_block) {
      bits |= std::uint64_t{1} << (v - 1);
    }
  }
  return SubsetWord(bits);
}

Hyperplane psi_inverse(SubsetWord x, GroundScale n) {
  if (x.empty()) throw InputError("psi_inverse of the empty set");
  if ((x.bits() & ~n.full_word()) != 0) {
    throw InputError("subset " + x.to_string() + " is not inside [" +
                     std::to_string(n.n()) + "]");
  }
  std::vector<int> labels(n.vertex_count(), 0);
  for (int v = 1; v <= n.n(); ++v) labels[v - 1] = x.contains(v) ? 1 : 0;
  return Hyperplane::from_partition(VertexPartition::from_labels(labels));
}

std::vector<SubsetWord> psi_of_hyperplanes_containing(
    const VertexPartition& f) {
  const int k = f.part_count();
  if (k < 2) return {};
  if (k > 63) {
    throw ResourceLimitError("too many hyperplanes above a flat with " +
                             std::to_string(k) + " parts");
  }
  const int apex_block = f.block_of(f.vertex_count());
  std::vector<std::uint64_t> free_blocks;
  for (const auto& part : f.parts()) {
    if (f.block_of(part.front()) == apex_block) continue;
    std::uint64_t w = 0;
    for (int v : part) w |= std::uint64_t{1} << (v - 1);
    free_blocks.push_back(w);
  }
  std::vector<SubsetWord> out;
  const std::uint64_t choices = std::uint64_t{1} << free_blocks.size();
  for (std::uint64_t mask = 1; mask < choices; ++mask) {
    std::uint64_t bits = 0;
    for (std::size_t b = 0; b < free_blocks.size(); ++b) {
      if ((mask >> b) & 1U) bits |= free_blocks[b];
    }
    out.emplace_back(bits);
  }
  return out;
}

std::vector<Hyperplane> hyperplanes_containing(const VertexPartition& f) {
  const GroundScale n(f.vertex_count() - 1);
  std::vector<Hyperplane> out;
  for (SubsetWord x : psi_of_hyperplanes_containing(f)) {
    out.push_back(psi_inverse(x, n));
  }
  return out;
}

VerificationReport verify_triple_claim(GroundScale n) {
  if (n.vertex_count() > 8) {
    throw ResourceLimitError("triple claim verification capped at n+1 <= 8");
  }
  VerificationReport report("triple-claim");
  if (n.n() < 2) return report;  // no rank-(n-2) flat with three parts

  for_each_partition(n.vertex_count(), 3, [&](const VertexPartition& f) {
    ++report.cases_checked;
    // Hyperplanes are found by brute force over all 2-partitions rather than
    // through the merge rule, so the count is checked independently.
    std::vector<Hyperplane> above;
    for_each_partition(n.vertex_count(), 2, [&](const VertexPartition& h) {
      if (f.refines(h)) above.push_back(Hyperplane::from_partition(h));
    });
    if (above.size() != 3) {
      report.fail("flat " + f.to_string() + " lies in " +
                  std::to_string(above.size()) + " hyperplanes");
      return;
    }
    std::array<SubsetWord, 3> img = {psi(above[0], n), psi(above[1], n),
                                     psi(above[2], n)};
    bool related = false;
    for (int u = 0; u < 3 && !related; ++u) {
      const SubsetWord a = img[(u + 1) % 3];
      const SubsetWord b = img[(u + 2) % 3];
      related = a.disjoint_from(b) && !a.empty() && !b.empty() &&
                (a | b) == img[u];
    }
    if (!related) {
      report.fail("psi-images above " + f.to_string() + " are " +
                  img[0].to_string() + "," + img[1].to_string() + "," +
                  img[2].to_string() + ", not a related triple");
    }
  });

  for_each_related_triple(n, [&](const RelatedTriple& t) {
    ++report.cases_checked;
    EdgeSet meet = psi_inverse(t.x0(), n).flat & psi_inverse(t.x1(), n).flat &
                   psi_inverse(t.x2(), n).flat;
    if (rank(meet) != n.n() - 2) {
      report.fail("psi-preimages of " + t.to_string() + " meet in rank " +
                  std::to_string(rank(meet)));
    }
  });
  return report;
}

}  // namespace clique_ext
