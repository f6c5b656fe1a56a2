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

#include "clique_ext/errors.h"
#include "doctest.h"
#include "oracles.h"

using namespace clique_ext;

namespace {

SubsetWord S(std::initializer_list<int> e) { return SubsetWord::of(e); }

SetFamily F(int n, std::vector<SubsetWord> members) {
  return SetFamily(GroundScale(n), std::move(members));
}

constexpr std::uint64_t kIntersecting[] = {0, 2, 4, 12, 81, 2646, 1422564};
constexpr std::uint64_t kDedekind[] = {2, 3, 6, 20, 168, 7581, 7828354};

}  // namespace

TEST_CASE("antichain examples") {
  CHECK(is_antichain(F(3, {S({1, 2}), S({1, 3}), S({2, 3})})));
  CHECK(is_intersecting_antichain(F(3, {S({1, 2}), S({1, 3}), S({2, 3})})));
  CHECK_FALSE(is_antichain(F(3, {S({1}), S({1, 2})})));
  CHECK(is_antichain(F(3, {S({1}), S({2})})));
  CHECK(is_antichain(F(3, {S({1, 2}), S({1, 3})})));
  CHECK(is_antichain(SetFamily(GroundScale(3))));
  CHECK_FALSE(is_intersecting_antichain(F(3, {S({1}), S({2})})));
  CHECK(is_intersecting_antichain(SetFamily(GroundScale(3))));
}

TEST_CASE("pairwise tests agree with the raw oracle") {
  for (int n = 1; n <= 4; ++n) {
    const int universe = (1 << n) - 1;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << universe); ++m) {
      const SetFamily b =
          SetFamily::from_membership_mask(GroundScale(n), m << 1);
      CHECK(is_antichain(b) == oracle::antichain(m << 1));
      CHECK(is_intersecting_antichain(b) ==
            oracle::intersecting_antichain(m << 1));
      CHECK(is_scarce(b) == is_intersecting_antichain(b));
    }
  }
}

TEST_CASE("scarce equivalence report") {
  for (int n = 1; n <= 4; ++n) {
    const VerificationReport r = scarce_equivalence_check(GroundScale(n));
    INFO(r.witness.value_or(""));
    CHECK(r.passed());
    CHECK(r.cases_checked == (std::uint64_t{1} << ((1 << n) - 1)));
  }
  CHECK_THROWS_AS(scarce_equivalence_check(GroundScale(5)),
                  ResourceLimitError);
}

TEST_CASE("conflict graph structure") {
  const ConflictGraph g = ConflictGraph::intersecting(GroundScale(3));
  CHECK(g.vertex_count() == 7);
  for (int u = 0; u < g.vertex_count(); ++u) {
    CHECK_FALSE(g.adjacent(u, u));
    for (int v = 0; v < g.vertex_count(); ++v) {
      CHECK(g.adjacent(u, v) == g.adjacent(v, u));
      if (u == v) continue;
      const SubsetWord a = g.label(u);
      const SubsetWord b = g.label(v);
      const bool expect = a.is_subset_of(b) || b.is_subset_of(a) ||
                          a.disjoint_from(b);
      CHECK(g.adjacent(u, v) == expect);
    }
  }
  const ConflictGraph c = ConflictGraph::comparability(GroundScale(7));
  CHECK(c.vertex_count() == 128);
  CHECK_THROWS_AS(ConflictGraph::comparability(GroundScale(8)),
                  ResourceLimitError);
}

TEST_CASE("intersecting antichain counts") {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t brute = oracle::count_subfamilies(
        n, [](oracle::Word m) { return oracle::intersecting_antichain(m); });
    CHECK(brute == kIntersecting[n]);
    CHECK(count_intersecting_antichains(GroundScale(n)) == brute);
  }
  CHECK(count_intersecting_antichains(GroundScale(5)) == kIntersecting[5]);
  CHECK(count_intersecting_antichains(GroundScale(6)) == kIntersecting[6]);
  CHECK(count_intersecting_antichains(GroundScale(5)) ==
        count_scarce(GroundScale(5)));
}

TEST_CASE("antichain counts against a plain walk") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(oracle::reference_antichain_count(n) == kDedekind[n]);
    CHECK(count_antichains(GroundScale(n)) == kDedekind[n]);
  }
  CHECK(count_antichains(GroundScale(6)) == kDedekind[6]);
  CHECK_THROWS_AS(count_antichains(GroundScale(7)), ResourceLimitError);
}

TEST_CASE("independent sets of small graphs by brute force") {
  // Random induced subgraphs are not exposed, so compare against direct
  // enumeration on the conflict graphs themselves for n <= 4.
  for (int n = 1; n <= 4; ++n) {
    const ConflictGraph g = ConflictGraph::comparability(GroundScale(n));
    const int v = g.vertex_count();
    std::uint64_t brute = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << v); ++s) {
      bool independent = true;
      for (int a = 0; a < v && independent; ++a) {
        if (!((s >> a) & 1U)) continue;
        for (int b = a + 1; b < v; ++b) {
          if (((s >> b) & 1U) && g.adjacent(a, b)) {
            independent = false;
            break;
          }
        }
      }
      brute += independent;
    }
    CHECK(count_independent_sets(g) == brute);
  }
}

TEST_CASE("counts do not depend on threads or split depth") {
  const ConflictGraph g = ConflictGraph::comparability(GroundScale(6));
  for (unsigned threads : {1U, 4U, 16U}) {
    for (int depth : {0, 2, 6, 9}) {
      RunOptions o;
      o.threads = threads;
      o.split_depth = depth;
      CHECK(count_independent_sets(g, o) == kDedekind[6]);
    }
  }
}

TEST_CASE("middle layer is an intersecting antichain") {
  for (int n = 1; n <= 12; ++n) {
    const SetFamily m = middle_layer_family(GroundScale(n));
    CHECK(m.size() == binomial(n, n / 2 + 1));
    CHECK(is_intersecting_antichain(m));
    if (n <= 6) CHECK(is_scarce(m));
  }
}

TEST_CASE("middle layer subfamilies") {
  for (int n = 1; n <= 4; ++n) {
    const SetFamily m = middle_layer_family(GroundScale(n));
    const auto& members = m.members();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << members.size());
         ++pick) {
      std::vector<SubsetWord> sub;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if ((pick >> i) & 1U) sub.push_back(members[i]);
      }
      CHECK(is_intersecting_antichain(SetFamily(GroundScale(n), sub)));
    }
  }
  CHECK(middle_layer_family(GroundScale(2)) == F(2, {S({1, 2})}));
  CHECK(middle_layer_family(GroundScale(3)) ==
        F(3, {S({1, 2}), S({1, 3}), S({2, 3})}));
}
