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

#ifndef CLIQUE_EXT_SUBSET_CORE_H_
#define CLIQUE_EXT_SUBSET_CORE_H_

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace clique_ext {

using BigInt = boost::multiprecision::cpp_int;

// Number of non-apex vertices. The clique lives on n+1 vertices and the
// Boolean lattice is P([n]).
class GroundScale {
 public:
  static constexpr int kMax = 64;

  // Throws InputError unless 1 <= n <= 64.
  explicit GroundScale(int n);

  int n() const { return n_; }
  int vertex_count() const { return n_ + 1; }
  // Characteristic word of [n].
  std::uint64_t full_word() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  friend bool operator==(GroundScale, GroundScale) = default;

 private:
  int n_;
};

// A subset of [n] as a characteristic word: bit i set means element i+1 is
// present. May be empty; family containers reject the empty word.
class SubsetWord {
 public:
  constexpr SubsetWord() = default;
  constexpr explicit SubsetWord(std::uint64_t bits)
      : bits_(bits), popcount_(std::popcount(bits)) {}

  // Elements are 1-based. Throws InputError for elements outside [1, 64].
  static SubsetWord of(std::initializer_list<int> elements);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return popcount_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int element) const {
    return (bits_ >> (element - 1)) & 1U;
  }
  constexpr bool is_subset_of(SubsetWord other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool disjoint_from(SubsetWord other) const {
    return (bits_ & other.bits_) == 0;
  }
  constexpr bool comparable_with(SubsetWord other) const {
    return is_subset_of(other) || other.is_subset_of(*this);
  }

  friend constexpr SubsetWord operator|(SubsetWord a, SubsetWord b) {
    return SubsetWord(a.bits_ | b.bits_);
  }
  friend constexpr SubsetWord operator&(SubsetWord a, SubsetWord b) {
    return SubsetWord(a.bits_ & b.bits_);
  }
  friend constexpr bool operator==(SubsetWord a, SubsetWord b) {
    return a.bits_ == b.bits_;
  }
  // Numeric order of the characteristic word; this is NOT the precedence
  // order used by phi (see precedes()).
  friend constexpr std::strong_ordering operator<=>(SubsetWord a,
                                                    SubsetWord b) {
    return a.bits_ <=> b.bits_;
  }

  // "{1,3,4}"; the empty set renders as "{}".
  std::string to_string() const;
  // Lowercase hex of the characteristic word, no prefix.
  std::string to_hex() const;
  // Inverse of to_hex(); throws InputError on malformed text.
  static SubsetWord from_hex(const std::string& text);

 private:
  std::uint64_t bits_ = 0;
  int popcount_ = 0;
};

SubsetWord complement(SubsetWord x, GroundScale n);

// min(|x|, n - |x|).
int key(SubsetWord x, GroundScale n);

// Strict total order on nonempty subsets: smaller key first, then smaller
// cardinality, then smaller characteristic word.
bool precedes(SubsetWord x, SubsetWord y, GroundScale n);

// Sorting key realizing precedes() lexicographically.
std::array<std::uint64_t, 3> precedence_rank(SubsetWord x, GroundScale n);

// {X, Y, X u Y} for disjoint nonempty X, Y, sorted by precedes().
struct RelatedTriple {
  std::array<SubsetWord, 3> members;
  // Index of the member equal to the union of the other two.
  int union_member = 0;

  SubsetWord x0() const { return members[0]; }
  SubsetWord x1() const { return members[1]; }
  SubsetWord x2() const { return members[2]; }
  bool contains(SubsetWord s) const {
    return members[0] == s || members[1] == s || members[2] == s;
  }

  friend bool operator==(const RelatedTriple&, const RelatedTriple&) = default;

  std::string to_string() const;
};

std::optional<RelatedTriple> related_triple_of(SubsetWord x, SubsetWord y,
                                               GroundScale n);

// Visits every related triple once, one per unordered disjoint pair {X, Y}.
void for_each_related_triple(GroundScale n,
                             const std::function<void(const RelatedTriple&)>&
                                 visit);
std::vector<RelatedTriple> enumerate_related_triples(GroundScale n);

// (3^n - 2^(n+1) + 1) / 2.
BigInt related_triple_count(int n);

// True iff key(x) <= floor(n/3).
bool in_small_side(SubsetWord x, GroundScale n);

// S(n) = {X nonempty : key(X) <= n/3}, in increasing word order.
std::vector<SubsetWord> small_side_family(GroundScale n);

// All nonempty subsets of [n], sorted by precedes(). Throws
// ResourceLimitError for n > 20.
std::vector<SubsetWord> nonempty_subsets_in_precedence_order(GroundScale n);

// Exact C(n, k); throws InputError unless 0 <= k <= n.
BigInt binomial(int n, int k);

// Sum of C(n, k) for k = 0 .. floor(numerator / denominator), with the
// upper limit clamped to n. Throws InputError for a non-positive
// denominator or a negative threshold.
BigInt binomial_sum_le(int n, std::int64_t numerator,
                       std::int64_t denominator = 1);

}  // namespace clique_ext

template <>
struct std::hash<clique_ext::SubsetWord> {
  std::size_t operator()(clique_ext::SubsetWord s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

#endif  // CLIQUE_EXT_SUBSET_CORE_H_
