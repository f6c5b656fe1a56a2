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

#include "clique_ext/subset_core.h"

#include <random>
#include <set>

#include "clique_ext/errors.h"
#include "doctest.h"

using namespace clique_ext;

namespace {
SubsetWord S(std::initializer_list<int> e) { return SubsetWord::of(e); }
}  // namespace

TEST_CASE("ground scale bounds") {
  CHECK_THROWS_AS(GroundScale(0), InputError);
  CHECK_THROWS_AS(GroundScale(65), InputError);
  CHECK(GroundScale(64).full_word() == ~std::uint64_t{0});
  CHECK(GroundScale(3).full_word() == 0b111);
  CHECK(GroundScale(3).vertex_count() == 4);
}

TEST_CASE("subset word basics") {
  const SubsetWord x = S({1, 3, 4});
  CHECK(x.bits() == 0b1101);
  CHECK(x.size() == 3);
  CHECK(x.to_string() == "{1,3,4}");
  CHECK(x.to_hex() == "d");
  CHECK(SubsetWord().to_string() == "{}");
  CHECK(SubsetWord::from_hex("D") == x);
  CHECK_THROWS_AS(SubsetWord::from_hex("xyz"), InputError);
  CHECK_THROWS_AS(SubsetWord::from_hex(""), InputError);
  CHECK_THROWS_AS(S({0}), InputError);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const SubsetWord w(rng());
    CHECK(SubsetWord::from_hex(w.to_hex()) == w);
    CHECK(w.size() == std::popcount(w.bits()));
  }
}

TEST_CASE("complement") {
  CHECK(complement(S({1}), GroundScale(3)) == S({2, 3}));
  CHECK(complement(S({1, 2, 3}), GroundScale(3)).empty());
  CHECK(complement(S({2, 4}), GroundScale(4)) == S({1, 3}));
}

TEST_CASE("key") {
  CHECK(key(S({1, 2}), GroundScale(2)) == 0);
  CHECK(key(S({1, 3}), GroundScale(4)) == 2);
  CHECK(key(S({2}), GroundScale(5)) == 1);

  for (int n = 1; n <= 6; ++n) {
    const GroundScale g(n);
    for (std::uint64_t w = 1; w <= g.full_word(); ++w) {
      const SubsetWord x(w);
      CHECK(2 * key(x, g) <= n);
      const SubsetWord c = complement(x, g);
      if (!c.empty()) CHECK(key(c, g) == key(x, g));
    }
  }
}

TEST_CASE("precedence examples") {
  CHECK(precedes(S({1, 2}), S({1}), GroundScale(2)));
  CHECK(precedes(S({1}), S({2}), GroundScale(2)));
  CHECK(precedes(S({1}), S({2, 3}), GroundScale(3)));
  CHECK_FALSE(precedes(S({2}), S({2}), GroundScale(3)));
}

TEST_CASE("precedence is a strict total order respecting key") {
  for (int n = 1; n <= 5; ++n) {
    const GroundScale g(n);
    const std::uint64_t top = g.full_word();
    for (std::uint64_t a = 1; a <= top; ++a) {
      const SubsetWord x(a);
      CHECK_FALSE(precedes(x, x, g));
      for (std::uint64_t b = 1; b <= top; ++b) {
        const SubsetWord y(b);
        if (a != b) {
          // Trichotomy.
          CHECK(precedes(x, y, g) != precedes(y, x, g));
        }
        if (key(x, g) < key(y, g)) CHECK(precedes(x, y, g));
        for (std::uint64_t c = 1; c <= top; ++c) {
          const SubsetWord z(c);
          if (precedes(x, y, g) && precedes(y, z, g)) {
            CHECK(precedes(x, z, g));
          }
        }
      }
    }
  }
}

TEST_CASE("related_triple_of") {
  auto t = related_triple_of(S({1}), S({2}), GroundScale(2));
  REQUIRE(t);
  CHECK(t->x0() == S({1, 2}));
  CHECK(t->x1() == S({1}));
  CHECK(t->x2() == S({2}));
  CHECK(t->union_member == 0);
  CHECK(t->to_string() == "({1,2},{1},{2})");

  CHECK_FALSE(related_triple_of(S({1}), S({1, 2}), GroundScale(2)));

  // n = 4: keys of {1,3}, {2}, {1,2,3} are 2, 1, 1; sizes break the tie.
  t = related_triple_of(S({1, 3}), S({2}), GroundScale(4));
  REQUIRE(t);
  CHECK(t->x0() == S({2}));
  CHECK(t->x1() == S({1, 2, 3}));
  CHECK(t->x2() == S({1, 3}));
  CHECK(t->union_member == 1);
}

TEST_CASE("related triples: counts and invariants") {
  CHECK(enumerate_related_triples(GroundScale(1)).empty());
  CHECK(enumerate_related_triples(GroundScale(2)).size() == 1);
  CHECK(enumerate_related_triples(GroundScale(3)).size() == 6);

  for (int n = 1; n <= 6; ++n) {
    const GroundScale g(n);
    // Brute force: ordered pairs of disjoint nonempty words, halved.
    std::uint64_t pairs = 0;
    for (std::uint64_t a = 1; a <= g.full_word(); ++a) {
      for (std::uint64_t b = 1; b <= g.full_word(); ++b) {
        if ((a & b) == 0) ++pairs;
      }
    }
    const auto triples = enumerate_related_triples(g);
    CHECK(triples.size() == pairs / 2);
    CHECK(BigInt(triples.size()) == related_triple_count(n));

    std::set<std::array<std::uint64_t, 3>> seen;
    for (const auto& t : triples) {
      CHECK(precedes(t.x0(), t.x1(), g));
      CHECK(precedes(t.x1(), t.x2(), g));
      const SubsetWord u = t.members[t.union_member];
      const SubsetWord a = t.members[(t.union_member + 1) % 3];
      const SubsetWord b = t.members[(t.union_member + 2) % 3];
      CHECK(a.disjoint_from(b));
      CHECK_FALSE(a.empty());
      CHECK_FALSE(b.empty());
      CHECK((a | b) == u);
      // The tripartition argument puts the least member in S(n).
      CHECK(in_small_side(t.x0(), g));
      CHECK(seen.insert({t.x0().bits(), t.x1().bits(), t.x2().bits()}).second);
    }
  }
  CHECK(related_triple_count(10) == (59049 - 2048 + 1) / 2);
}

TEST_CASE("small side family") {
  CHECK(small_side_family(GroundScale(3)).size() == 7);
  CHECK(small_side_family(GroundScale(2)) ==
        std::vector<SubsetWord>{S({1, 2})});
  const auto s4 = small_side_family(GroundScale(4));
  CHECK(s4.size() == 9);
  for (SubsetWord x : s4) CHECK((x.size() == 1 || x.size() >= 3));

  for (int n = 1; n <= 12; ++n) {
    const GroundScale g(n);
    std::vector<SubsetWord> filtered;
    for (std::uint64_t w = 1; w <= g.full_word(); ++w) {
      if (key(SubsetWord(w), g) <= n / 3) filtered.emplace_back(w);
    }
    CHECK(small_side_family(g) == filtered);
    CHECK(BigInt(filtered.size()) <= 2 * binomial_sum_le(n, n, 3));
  }
}

TEST_CASE("precedence listing") {
  const auto order = nonempty_subsets_in_precedence_order(GroundScale(2));
  REQUIRE(order.size() == 3);
  CHECK(order[0] == S({1, 2}));
  CHECK(order[1] == S({1}));
  CHECK(order[2] == S({2}));
  CHECK_THROWS_AS(nonempty_subsets_in_precedence_order(GroundScale(21)),
                  ResourceLimitError);
}

TEST_CASE("binomials") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 2) == 3);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
  CHECK(binomial_sum_le(4, 4, 3) == 5);
  CHECK(binomial_sum_le(64, 64) == (BigInt(1) << 64));
  CHECK_THROWS_AS(binomial(3, 4), InputError);
  CHECK_THROWS_AS(binomial(3, -1), InputError);
  CHECK_THROWS_AS(binomial_sum_le(3, 1, 0), InputError);
  // Pascal's rule as an independent check.
  for (int n = 1; n <= 40; ++n) {
    for (int k = 1; k < n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}
