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

#include "clique_ext/linear_family.h"

#include <algorithm>
#include <bit>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>

#include "clique_ext/errors.h"
#include "parallel.h"

namespace clique_ext {
namespace {

constexpr int kMaxMaskScale = 6;

int enumeration_cap(const RunOptions& options) {
  return options.force ? kMaxMaskScale : 5;
}

void require_mask_scale(GroundScale n, const char* what) {
  if (n.n() > kMaxMaskScale) {
    throw ResourceLimitError(std::string(what) + " needs n <= 6, got n = " +
                             std::to_string(n.n()));
  }
}

// The search tree shared by enumeration and counting. Positions index the
// nonempty subsets in precedence order; a state is a word over positions.
class FamilySearch {
 public:
  FamilySearch(GroundScale n, FamilyKind kind)
      : n_(n), kind_(kind), order_(nonempty_subsets_in_precedence_order(n)) {
    std::vector<int> position(std::size_t{1} << n.n(), -1);
    for (std::size_t p = 0; p < order_.size(); ++p) {
      position[order_[p].bits()] = static_cast<int>(p);
    }
    closing_pairs_.resize(order_.size());
    earlier_partners_.assign(order_.size(), 0);
    for_each_related_triple(n, [&](const RelatedTriple& t) {
      const std::uint64_t b0 = std::uint64_t{1} << position[t.x0().bits()];
      const std::uint64_t b1 = std::uint64_t{1} << position[t.x1().bits()];
      const int p1 = position[t.x1().bits()];
      const int p2 = position[t.x2().bits()];
      closing_pairs_[p2].emplace_back(b0, b1);
      earlier_partners_[p1] |= b0;
      earlier_partners_[p2] |= b0 | b1;
    });
  }

  int depth() const { return static_cast<int>(order_.size()); }

  // Which branches are consistent at `pos` given the decisions in `state`.
  std::pair<bool, bool> branches(int pos, std::uint64_t state) const {
    if (kind_ == FamilyKind::kScarce) {
      return {true, (state & earlier_partners_[pos]) == 0};
    }
    bool forced_in = false;
    bool forced_out = false;
    for (auto [a, b] : closing_pairs_[pos]) {
      const bool has_a = (state & a) != 0;
      const bool has_b = (state & b) != 0;
      if (has_a && has_b) {
        forced_in = true;
      } else if (has_a || has_b) {
        forced_out = true;
      }
    }
    return {!forced_in, !forced_out};
  }

  std::uint64_t count(int pos, std::uint64_t state, DeadlineProbe& probe) const {
    probe.tick();
    if (pos == depth()) return 1;
    auto [may_exclude, may_include] = branches(pos, state);
    std::uint64_t total = 0;
    if (may_exclude) total += count(pos + 1, state, probe);
    if (may_include) {
      total += count(pos + 1, state | (std::uint64_t{1} << pos), probe);
    }
    return total;
  }

  void visit(int pos, std::uint64_t state, DeadlineProbe& probe,
             const std::function<void(const SetFamily&)>& fn) const {
    probe.tick();
    if (pos == depth()) {
      fn(family_of(state));
      return;
    }
    auto [may_exclude, may_include] = branches(pos, state);
    if (may_exclude) visit(pos + 1, state, probe, fn);
    if (may_include) {
      visit(pos + 1, state | (std::uint64_t{1} << pos), probe, fn);
    }
  }

  // Consistent states after the first `levels` decisions, in DFS order.
  std::vector<std::uint64_t> frontier(int levels) const {
    std::vector<std::uint64_t> out;
    std::function<void(int, std::uint64_t)> walk = [&](int pos,
                                                       std::uint64_t state) {
      if (pos == levels) {
        out.push_back(state);
        return;
      }
      auto [may_exclude, may_include] = branches(pos, state);
      if (may_exclude) walk(pos + 1, state);
      if (may_include) walk(pos + 1, state | (std::uint64_t{1} << pos));
    };
    walk(0, 0);
    return out;
  }

  SetFamily family_of(std::uint64_t state) const {
    std::vector<SubsetWord> members;
    for (std::uint64_t rest = state; rest != 0; rest &= rest - 1) {
      members.push_back(order_[std::countr_zero(rest)]);
    }
    return SetFamily(n_, std::move(members));
  }

 private:
  GroundScale n_;
  FamilyKind kind_;
  std::vector<SubsetWord> order_;
  // Linear mode: pairs (x0, x1) of triples whose last member sits here.
  std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>>
      closing_pairs_;
  // Scarce mode: earlier positions sharing some triple with this one.
  std::vector<std::uint64_t> earlier_partners_;
};

const char* kind_name(FamilyKind kind) {
  return kind == FamilyKind::kLinear ? "linear" : "scarce";
}

void check_enumeration_scale(GroundScale n, FamilyKind kind,
                             const RunOptions& options) {
  if (n.n() > enumeration_cap(options)) {
    throw ResourceLimitError(
        std::string("enumerating ") + kind_name(kind) +
        " families is capped at n <= 5 (n <= 6 with --force); got n = " +
        std::to_string(n.n()));
  }
}

}  // namespace

SetFamily::SetFamily(GroundScale n, std::vector<SubsetWord> members)
    : scale_(n), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t k = 0; k < members_.size(); ++k) {
    const SubsetWord s = members_[k];
    if (s.empty()) throw InputError("families never contain the empty set");
    if ((s.bits() & ~n.full_word()) != 0) {
      throw InputError("member " + s.to_string() + " is not inside [" +
                       std::to_string(n.n()) + "]");
    }
    if (k > 0 && members_[k - 1] == s) {
      throw InputError("duplicate family member " + s.to_string());
    }
  }
}

bool SetFamily::contains(SubsetWord s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

std::uint64_t SetFamily::membership_mask() const {
  require_mask_scale(scale_, "membership_mask");
  std::uint64_t mask = 0;
  for (SubsetWord s : members_) mask |= std::uint64_t{1} << s.bits();
  return mask;
}

SetFamily SetFamily::from_membership_mask(GroundScale n, std::uint64_t mask) {
  require_mask_scale(n, "from_membership_mask");
  std::vector<SubsetWord> members;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    members.emplace_back(static_cast<std::uint64_t>(std::countr_zero(rest)));
  }
  return SetFamily(n, std::move(members));
}

std::string SetFamily::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k != 0) out += ',';
    out += members_[k].to_string();
  }
  out += '}';
  return out;
}

std::optional<RelatedTriple> violating_triple(const SetFamily& b,
                                              FamilyKind kind) {
  const GroundScale n = b.scale();
  const std::uint64_t full = n.full_word();
  // Every unordered disjoint pair {x, y}, x < y, paired with x u y.
  for (std::uint64_t x = 1; x != 0 && x <= full; ++x) {
    const bool has_x = b.contains(SubsetWord(x));
    const std::uint64_t rest = full & ~x;
    for (std::uint64_t y = rest; y != 0; y = (y - 1) & rest) {
      if (y <= x) continue;
      const int met = static_cast<int>(has_x) +
                      static_cast<int>(b.contains(SubsetWord(y))) +
                      static_cast<int>(b.contains(SubsetWord(x | y)));
      const bool bad = kind == FamilyKind::kLinear ? met == 2 : met >= 2;
      if (bad) return related_triple_of(SubsetWord(x), SubsetWord(y), n);
    }
    if (x == full) break;
  }
  return std::nullopt;
}

SetFamily phi_compress(const SetFamily& b) {
  if (auto t = violating_triple(b, FamilyKind::kLinear)) {
    throw ContractViolation("phi applied to a non-linear family; triple " +
                            t->to_string() + " is met twice");
  }
  const GroundScale n = b.scale();
  const auto& m = b.members();
  std::unordered_set<SubsetWord> removed;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!m[i].disjoint_from(m[j]) || !b.contains(m[i] | m[j])) continue;
      const RelatedTriple t = *related_triple_of(m[i], m[j], n);
      removed.insert(t.x0());
      removed.insert(t.x2());
    }
  }
  std::vector<SubsetWord> kept;
  for (SubsetWord s : m) {
    if (!removed.contains(s)) kept.push_back(s);
  }
  return SetFamily(n, std::move(kept));
}

FiberKey fiber_key(const SetFamily& b) {
  FiberKey key{phi_compress(b), {}};
  for (SubsetWord s : b.members()) {
    if (in_small_side(s, b.scale())) key.small_trace.push_back(s);
  }
  return key;
}

void enumerate_families(GroundScale n, FamilyKind kind,
                        const std::function<void(const SetFamily&)>& visit,
                        const RunOptions& options) {
  check_enumeration_scale(n, kind, options);
  const FamilySearch search(n, kind);
  DeadlineProbe probe(options, std::string("enumerate ") + kind_name(kind));
  search.visit(0, 0, probe, visit);
}

BigInt count_families(GroundScale n, FamilyKind kind,
                      const RunOptions& options) {
  check_enumeration_scale(n, kind, options);
  const FamilySearch search(n, kind);
  if (options.threads <= 1 && options.split_depth < 0) {
    DeadlineProbe probe(options, std::string("count ") + kind_name(kind));
    return BigInt(search.count(0, 0, probe));
  }
  const int levels = std::clamp(
      options.split_depth < 0 ? 12 : options.split_depth, 0, search.depth());
  const std::vector<std::uint64_t> roots = search.frontier(levels);
  std::vector<std::uint64_t> partial(roots.size(), 0);
  internal::parallel_for(roots.size(), options.threads, [&](std::size_t i) {
    DeadlineProbe probe(options, std::string("count ") + kind_name(kind));
    partial[i] = search.count(levels, roots[i], probe);
  });
  BigInt total = 0;
  for (std::uint64_t c : partial) total += c;
  return total;
}

BigInt brute_force_families(
    GroundScale n, const std::function<bool(const SetFamily&)>& predicate,
    const RunOptions& options) {
  const int cap = options.force ? 5 : 4;
  if (n.n() > cap) {
    throw ResourceLimitError(
        "brute force over all subfamilies is capped at n <= 4 (n <= 5 with "
        "--force); got n = " + std::to_string(n.n()));
  }
  const int universe = (1 << n.n()) - 1;
  const std::uint64_t total = std::uint64_t{1} << universe;
  // Chunks keep the result independent of the worker count.
  const std::uint64_t chunk = std::min<std::uint64_t>(total, 1U << 12);
  const std::size_t chunks = static_cast<std::size_t>(total / chunk);
  std::vector<std::uint64_t> hits(chunks, 0);
  internal::parallel_for(chunks, options.threads, [&](std::size_t c) {
    DeadlineProbe probe(options, "brute force");
    std::uint64_t local = 0;
    for (std::uint64_t m = c * chunk; m < (c + 1) * chunk; ++m) {
      probe.tick();
      // Bit k of m selects the subset with word k + 1.
      if (predicate(SetFamily::from_membership_mask(n, m << 1))) ++local;
    }
    hits[c] = local;
  });
  BigInt count = 0;
  for (std::uint64_t h : hits) count += h;
  return count;
}

VerificationReport verify_phi_properties(GroundScale n,
                                         const RunOptions& options) {
  if (n.n() > (options.force ? 5 : 4)) {
    throw ResourceLimitError(
        "phi verification is capped at n <= 4 (n <= 5 with --force)");
  }
  VerificationReport report("phi");
  std::set<FiberKey> keys;
  std::uint64_t linear_total = 0;
  enumerate_linear(
      n,
      [&](const SetFamily& b) {
        ++linear_total;
        ++report.cases_checked;
        const SetFamily compressed = phi_compress(b);
        if (!is_scarce(compressed)) {
          report.fail("phi(" + b.to_string() + ") = " +
                      compressed.to_string() + " is not scarce");
        }
        if (!std::includes(b.members().begin(), b.members().end(),
                           compressed.members().begin(),
                           compressed.members().end())) {
          report.fail("phi(" + b.to_string() + ") is not inside b");
        }
        if (is_scarce(b) && compressed != b) {
          report.fail("phi moves the scarce family " + b.to_string());
        }
        // Tops of contained triples, and the small-side test on bottoms.
        std::unordered_set<SubsetWord> tops;
        const auto& m = b.members();
        for (std::size_t i = 0; i < m.size(); ++i) {
          for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (!m[i].disjoint_from(m[j]) || !b.contains(m[i] | m[j])) {
              continue;
            }
            const RelatedTriple t = *related_triple_of(m[i], m[j], n);
            tops.insert(t.x2());
            if (!in_small_side(t.x0(), n)) {
              report.fail("least member of " + t.to_string() +
                          " lies outside S(n)");
            }
          }
        }
        for (SubsetWord s : m) {
          if (compressed.contains(s)) continue;
          if (!in_small_side(s, n) && !tops.contains(s)) {
            report.fail("phi removed " + s.to_string() + " from " +
                        b.to_string() +
                        " although it is neither in S(n) nor a triple top");
          }
        }
        if (!keys.insert(fiber_key(b)).second) {
          report.fail("fiber key of " + b.to_string() + " is shared");
        }
      },
      options);

  const BigInt scarce = count_scarce(n, options);
  const BigInt small_side = small_side_family(n).size();
  const BigInt bound = scarce << static_cast<unsigned>(small_side);
  ++report.cases_checked;
  if (BigInt(linear_total) > bound) {
    report.fail("|Q(n)| = " + std::to_string(linear_total) +
                " exceeds |Q_s(n)| * 2^|S(n)| = " + bound.str());
  }
  return report;
}

std::string family_line(const SetFamily& b) {
  std::string out;
  for (std::size_t k = 0; k < b.members().size(); ++k) {
    if (k != 0) out += ',';
    out += b.members()[k].to_hex();
  }
  return out;
}

SetFamily parse_family_line(GroundScale n, const std::string& line) {
  std::vector<SubsetWord> members;
  if (line.find_first_not_of(" \t\r") == std::string::npos) {
    return SetFamily(n);
  }
  std::stringstream stream(line);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const auto first = token.find_first_not_of(" \t\r");
    const auto last = token.find_last_not_of(" \t\r");
    if (first == std::string::npos) {
      throw InputError("empty member in family line '" + line + "'");
    }
    members.push_back(SubsetWord::from_hex(token.substr(first, last - first + 1)));
  }
  return SetFamily(n, std::move(members));
}

std::vector<SetFamily> read_family_file(GroundScale n, std::istream& in) {
  std::vector<SetFamily> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '#') continue;
    out.push_back(parse_family_line(n, line));
  }
  return out;
}

}  // namespace clique_ext
