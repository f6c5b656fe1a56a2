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

#include <algorithm>
#include <cstdio>
#include <string>

#include "clique_ext/errors.h"

namespace clique_ext {

GroundScale::GroundScale(int n) : n_(n) {
  if (n < 1 || n > kMax) {
    throw InputError("ground scale n must lie in [1, 64], got " +
                     std::to_string(n));
  }
}

SubsetWord SubsetWord::of(std::initializer_list<int> elements) {
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > GroundScale::kMax) {
      throw InputError("subset element out of range: " + std::to_string(e));
    }
    bits |= std::uint64_t{1} << (e - 1);
  }
  return SubsetWord(bits);
}

std::string SubsetWord::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    if (!first) out += ',';
    out += std::to_string(std::countr_zero(rest) + 1);
    first = false;
  }
  out += '}';
  return out;
}

std::string SubsetWord::to_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%llx",
                static_cast<unsigned long long>(bits_));
  return buf;
}

SubsetWord SubsetWord::from_hex(const std::string& text) {
  if (text.empty() || text.size() > 16) {
    throw InputError("malformed subset word: '" + text + "'");
  }
  std::uint64_t bits = 0;
  for (char c : text) {
    int digit;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      digit = c - 'A' + 10;
    } else {
      throw InputError("malformed subset word: '" + text + "'");
    }
    bits = (bits << 4) | static_cast<std::uint64_t>(digit);
  }
  return SubsetWord(bits);
}

SubsetWord complement(SubsetWord x, GroundScale n) {
  return SubsetWord(~x.bits() & n.full_word());
}

int key(SubsetWord x, GroundScale n) {
  return std::min(x.size(), n.n() - x.size());
}

std::array<std::uint64_t, 3> precedence_rank(SubsetWord x, GroundScale n) {
  return {static_cast<std::uint64_t>(key(x, n)),
          static_cast<std::uint64_t>(x.size()), x.bits()};
}

bool precedes(SubsetWord x, SubsetWord y, GroundScale n) {
  return precedence_rank(x, n) < precedence_rank(y, n);
}

std::string RelatedTriple::to_string() const {
  return "(" + members[0].to_string() + "," + members[1].to_string() + "," +
         members[2].to_string() + ")";
}

std::optional<RelatedTriple> related_triple_of(SubsetWord x, SubsetWord y,
                                               GroundScale n) {
  if (x.empty() || y.empty() || !x.disjoint_from(y)) return std::nullopt;
  const SubsetWord u = x | y;
  RelatedTriple t;
  t.members = {x, y, u};
  std::sort(t.members.begin(), t.members.end(),
            [n](SubsetWord a, SubsetWord b) { return precedes(a, b, n); });
  for (int i = 0; i < 3; ++i) {
    if (t.members[i] == u) t.union_member = i;
  }
  return t;
}

void for_each_related_triple(
    GroundScale n, const std::function<void(const RelatedTriple&)>& visit) {
  const std::uint64_t full = n.full_word();
  // x runs over nonempty words; y over nonempty submasks of [n] \ x with
  // y > x, so each unordered pair is produced once.
  for (std::uint64_t x = 1; x != 0 && x <= full; ++x) {
    const std::uint64_t rest = full & ~x;
    for (std::uint64_t y = rest; y != 0; y = (y - 1) & rest) {
      if (y <= x) continue;
      visit(*related_triple_of(SubsetWord(x), SubsetWord(y), n));
    }
    if (x == full) break;
  }
}

std::vector<RelatedTriple> enumerate_related_triples(GroundScale n) {
  std::vector<RelatedTriple> out;
  for_each_related_triple(n,
                          [&out](const RelatedTriple& t) { out.push_back(t); });
  return out;
}

BigInt related_triple_count(int n) {
  BigInt three = boost::multiprecision::pow(BigInt(3), n);
  BigInt two = BigInt(1) << (n + 1);
  return (three - two + 1) / 2;
}

bool in_small_side(SubsetWord x, GroundScale n) {
  return !x.empty() && key(x, n) <= n.n() / 3;
}

std::vector<SubsetWord> small_side_family(GroundScale n) {
  // Words with |x| <= t or |x| >= n - t, generated by size so that large n
  // stays proportional to the output.
  const int t = n.n() / 3;
  std::vector<SubsetWord> out;
  auto emit_size = [&](int k) {
    if (k == 0 || k > n.n()) return;
    if (k == 64) {
      out.emplace_back(~std::uint64_t{0});
      return;
    }
    // Gosper's hack over k-subsets of [n].
    std::uint64_t w = (std::uint64_t{1} << k) - 1;
    const std::uint64_t full = n.full_word();
    while (true) {
      out.emplace_back(w);
      const std::uint64_t c = w & (~w + 1);
      const std::uint64_t r = w + c;
      if (r == 0 || (r & ~full) != 0) break;
      w = (((r ^ w) >> 2) / c) | r;
      if ((w & ~full) != 0) break;
    }
  };
  for (int k = 1; k <= n.n(); ++k) {
    if (std::min(k, n.n() - k) <= t) emit_size(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubsetWord> nonempty_subsets_in_precedence_order(GroundScale n) {
  if (n.n() > 20) {
    throw ResourceLimitError("refusing to list 2^" + std::to_string(n.n()) +
                             " subsets");
  }
  std::vector<SubsetWord> out;
  for (std::uint64_t w = 1; w <= n.full_word(); ++w) out.emplace_back(w);
  std::sort(out.begin(), out.end(),
            [n](SubsetWord a, SubsetWord b) { return precedes(a, b, n); });
  return out;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw InputError("binomial(" + std::to_string(n) + ", " +
                     std::to_string(k) + ") out of range");
  }
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt binomial_sum_le(int n, std::int64_t numerator,
                       std::int64_t denominator) {
  if (denominator <= 0 || numerator < 0 || n < 0) {
    throw InputError("binomial_sum_le needs n >= 0 and a nonnegative "
                     "threshold with positive denominator");
  }
  const std::int64_t upper =
      std::min<std::int64_t>(numerator / denominator, n);
  BigInt sum = 0;
  for (int k = 0; k <= upper; ++k) sum += binomial(n, k);
  return sum;
}

}  // namespace clique_ext
