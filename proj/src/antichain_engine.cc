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

#include "clique_ext/antichain_engine.h"

#include <bit>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>

#include "clique_ext/errors.h"
#include "parallel.h"

namespace clique_ext {
namespace {

using VertexSet = ConflictGraph::VertexSet;

bool none(const VertexSet& s) { return (s[0] | s[1]) == 0; }
int popcount(const VertexSet& s) {
  return std::popcount(s[0]) + std::popcount(s[1]);
}
VertexSet meet(const VertexSet& a, const VertexSet& b) {
  return {a[0] & b[0], a[1] & b[1]};
}
VertexSet without(const VertexSet& a, const VertexSet& b) {
  return {a[0] & ~b[0], a[1] & ~b[1]};
}
VertexSet join(const VertexSet& a, const VertexSet& b) {
  return {a[0] | b[0], a[1] | b[1]};
}
VertexSet single(int v) {
  VertexSet s{0, 0};
  s[v / 64] = std::uint64_t{1} << (v % 64);
  return s;
}
int lowest(const VertexSet& s) {
  return s[0] != 0 ? std::countr_zero(s[0]) : 64 + std::countr_zero(s[1]);
}
template <typename Fn>
void for_each_vertex(const VertexSet& s, Fn&& fn) {
  for (int w = 0; w < 2; ++w) {
    for (std::uint64_t rest = s[w]; rest != 0; rest &= rest - 1) {
      fn(64 * w + std::countr_zero(rest));
    }
  }
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ResourceLimitError("independent-set count overflows 64 bits");
  }
  return r;
}
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ResourceLimitError("independent-set count overflows 64 bits");
  }
  return r;
}

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::uint64_t h = s[0] * 0x9e3779b97f4a7c15ULL;
    h ^= (s[1] + 0x632be59bd9b4e019ULL) * 0xc2b2ae3d27d4eb4fULL;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

// Residual-set memo. Shards keep lock contention low; entries are written
// once and never changed, so the first insert wins.
class SharedMemo {
 public:
  bool find(const VertexSet& s, std::uint64_t& value) {
    Shard& shard = shard_of(s);
    std::lock_guard lock(shard.mutex);
    auto it = shard.table.find(s);
    if (it == shard.table.end()) return false;
    value = it->second;
    return true;
  }
  void insert(const VertexSet& s, std::uint64_t value) {
    Shard& shard = shard_of(s);
    std::lock_guard lock(shard.mutex);
    shard.table.try_emplace(s, value);
  }

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    std::mutex mutex;
    std::unordered_map<VertexSet, std::uint64_t, VertexSetHash> table;
  };
  Shard& shard_of(const VertexSet& s) {
    return shards_[(VertexSetHash{}(s) >> 7) % kShards];
  }
  std::array<Shard, kShards> shards_;
};

class IndependentSetCounter {
 public:
  explicit IndependentSetCounter(const ConflictGraph& graph) : graph_(graph) {}

  std::uint64_t count(const VertexSet& s, DeadlineProbe& probe) {
    probe.tick();
    const int size = popcount(s);
    if (size == 0) return 1;
    if (size == 1) return 2;
    std::uint64_t cached;
    if (memo_.find(s, cached)) return cached;

    std::uint64_t result;
    const VertexSet comp = component_of(lowest(s), s);
    if (comp != s) {
      result = checked_mul(count(comp, probe), count(without(s, comp), probe));
    } else {
      int best = -1;
      int best_degree = -1;
      int min_degree = size;
      for_each_vertex(s, [&](int v) {
        const int d = popcount(meet(graph_.neighbours(v), s));
        if (d > best_degree) {
          best_degree = d;
          best = v;
        }
        min_degree = std::min(min_degree, d);
      });
      if (min_degree == size - 1) {
        // A clique: the empty set or one vertex.
        result = static_cast<std::uint64_t>(size) + 1;
      } else {
        result = checked_add(
            count(without(s, single(best)), probe),
            count(without(s, join(graph_.neighbours(best), single(best))),
                  probe));
      }
    }
    memo_.insert(s, result);
    return result;
  }

  // Residual sets after branching `levels` times on maximum-degree
  // vertices; their counts sum to count(s).
  std::vector<VertexSet> split(const VertexSet& s, int levels) const {
    if (levels == 0 || popcount(s) <= 1) return {s};
    int best = -1;
    int best_degree = -1;
    for_each_vertex(s, [&](int v) {
      const int d = popcount(meet(graph_.neighbours(v), s));
      if (d > best_degree) {
        best_degree = d;
        best = v;
      }
    });
    std::vector<VertexSet> out = split(without(s, single(best)), levels - 1);
    std::vector<VertexSet> right = split(
        without(s, join(graph_.neighbours(best), single(best))), levels - 1);
    out.insert(out.end(), right.begin(), right.end());
    return out;
  }

 private:
  VertexSet component_of(int start, const VertexSet& s) const {
    VertexSet comp = single(start);
    VertexSet frontier = comp;
    while (!none(frontier)) {
      VertexSet reach{0, 0};
      for_each_vertex(frontier, [&](int v) {
        reach = join(reach, graph_.neighbours(v));
      });
      frontier = without(meet(reach, s), comp);
      comp = join(comp, frontier);
    }
    return comp;
  }

  const ConflictGraph& graph_;
  SharedMemo memo_;
};

int counting_cap(const RunOptions& options) { return options.force ? 7 : 6; }

}  // namespace

bool is_antichain(const SetFamily& b) {
  const auto& m = b.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[i].comparable_with(m[j])) return false;
    }
  }
  return true;
}

bool is_intersecting_antichain(const SetFamily& b) {
  const auto& m = b.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[i].comparable_with(m[j]) || m[i].disjoint_from(m[j])) {
        return false;
      }
    }
  }
  return true;
}

VerificationReport scarce_equivalence_check(GroundScale n,
                                            const RunOptions& options) {
  if (n.n() > (options.force ? 5 : 4)) {
    throw ResourceLimitError(
        "scarce/intersecting-antichain check is capped at n <= 4 (n <= 5 "
        "with --force)");
  }
  VerificationReport report("scarce-equivalence");
  const int universe = (1 << n.n()) - 1;
  const std::uint64_t total = std::uint64_t{1} << universe;
  const std::uint64_t chunk = std::min<std::uint64_t>(total, 1U << 12);
  const std::size_t chunks = static_cast<std::size_t>(total / chunk);
  std::vector<VerificationReport> parts(chunks);
  internal::parallel_for(chunks, options.threads, [&](std::size_t c) {
    DeadlineProbe probe(options, "scarce equivalence");
    for (std::uint64_t m = c * chunk; m < (c + 1) * chunk; ++m) {
      probe.tick();
      const SetFamily b = SetFamily::from_membership_mask(n, m << 1);
      ++parts[c].cases_checked;
      const bool scarce = is_scarce(b);
      const bool ia = is_intersecting_antichain(b);
      if (scarce != ia) {
        parts[c].fail(b.to_string() + (scarce ? " is scarce but not"
                                              : " is not scarce but is") +
                      " an intersecting antichain");
      }
    }
  });
  for (const auto& p : parts) report.absorb(p);
  return report;
}

ConflictGraph::ConflictGraph(std::vector<SubsetWord> labels,
                             bool disjoint_conflicts)
    : labels_(std::move(labels)), adjacency_(labels_.size(), {0, 0}) {
  if (labels_.size() > kMaxVertices) {
    throw ResourceLimitError("conflict graph exceeds 128 vertices");
  }
  for (std::size_t u = 0; u < labels_.size(); ++u) {
    for (std::size_t v = u + 1; v < labels_.size(); ++v) {
      const SubsetWord a = labels_[u];
      const SubsetWord b = labels_[v];
      if (a.comparable_with(b) || (disjoint_conflicts && a.disjoint_from(b))) {
        adjacency_[u][v / 64] |= std::uint64_t{1} << (v % 64);
        adjacency_[v][u / 64] |= std::uint64_t{1} << (u % 64);
      }
    }
  }
}

ConflictGraph ConflictGraph::intersecting(GroundScale n) {
  if (n.n() > 7) throw ResourceLimitError("conflict graph needs n <= 7");
  std::vector<SubsetWord> labels;
  for (std::uint64_t w = 1; w <= n.full_word(); ++w) labels.emplace_back(w);
  return ConflictGraph(std::move(labels), true);
}

ConflictGraph ConflictGraph::comparability(GroundScale n) {
  if (n.n() > 7) throw ResourceLimitError("comparability graph needs n <= 7");
  std::vector<SubsetWord> labels;
  for (std::uint64_t w = 0; w <= n.full_word(); ++w) labels.emplace_back(w);
  return ConflictGraph(std::move(labels), false);
}

BigInt count_independent_sets(const ConflictGraph& graph,
                              const RunOptions& options) {
  VertexSet all{0, 0};
  for (int v = 0; v < graph.vertex_count(); ++v) all = join(all, single(v));
  IndependentSetCounter counter(graph);
  if (options.threads <= 1 && options.split_depth < 0) {
    DeadlineProbe probe(options, "independent-set count");
    return BigInt(counter.count(all, probe));
  }
  const int levels = options.split_depth < 0 ? 6 : options.split_depth;
  const std::vector<VertexSet> roots = counter.split(all, levels);
  std::vector<std::uint64_t> partial(roots.size(), 0);
  internal::parallel_for(roots.size(), options.threads, [&](std::size_t i) {
    DeadlineProbe probe(options, "independent-set count");
    partial[i] = counter.count(roots[i], probe);
  });
  BigInt total = 0;
  for (std::uint64_t c : partial) total += c;
  return total;
}

BigInt count_intersecting_antichains(GroundScale n, const RunOptions& options) {
  if (n.n() > counting_cap(options)) {
    throw ResourceLimitError(
        "intersecting-antichain counting is capped at n <= 6 (n <= 7 with "
        "--force); got n = " + std::to_string(n.n()));
  }
  return count_independent_sets(ConflictGraph::intersecting(n), options);
}

BigInt count_antichains(GroundScale n, const RunOptions& options) {
  if (n.n() > counting_cap(options)) {
    throw ResourceLimitError(
        "antichain counting is capped at n <= 6 (n <= 7 with --force); got "
        "n = " + std::to_string(n.n()));
  }
  return count_independent_sets(ConflictGraph::comparability(n), options);
}

SetFamily middle_layer_family(GroundScale n) {
  const int size = n.n() / 2 + 1;
  std::vector<SubsetWord> members;
  if (n.n() > 24) {
    throw ResourceLimitError("middle layer listing needs n <= 24");
  }
  for (std::uint64_t w = 1; w <= n.full_word(); ++w) {
    if (std::popcount(w) == size) members.emplace_back(w);
  }
  return SetFamily(n, std::move(members));
}

}  // namespace clique_ext
