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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "clique_ext/antichain_engine.h"
#include "clique_ext/clique_matroid.h"
#include "clique_ext/crapo_extension.h"
#include "clique_ext/errors.h"
#include "clique_ext/linear_family.h"
#include "clique_ext/subset_core.h"
#include "oracles.h"

using namespace clique_ext;

namespace {

using Clock = std::chrono::steady_clock;

// Collects the first problem found by a criterion.
class Outcome {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && problem_.empty()) problem_ = what;
  }
  void expect(const VerificationReport& r) {
    expect(r.passed(), r.name + ": " + r.witness.value_or("failed"));
  }
  bool ok() const { return problem_.empty(); }
  const std::string& problem() const { return problem_; }

 private:
  std::string problem_;
};

std::string str(const BigInt& v) { return v.str(); }

// Antichains of P(n) with ∅ allowed as a member, by trying every family.
std::uint64_t brute_antichains(int n) {
  const oracle::Word subsets = oracle::Word{1} << n;
  std::uint64_t hits = 0;
  for (oracle::Word m = 0; m < (oracle::Word{1} << subsets); ++m) {
    hits += oracle::antichain(m);
  }
  return hits;
}

void counting_oracles(Outcome& o) {
  for (int n = 1; n <= 4; ++n) {
    const GroundScale g(n);
    const auto lin = oracle::count_subfamilies(
        n, [n](oracle::Word m) { return oracle::linear(n, m); });
    const auto sca = oracle::count_subfamilies(
        n, [n](oracle::Word m) { return oracle::scarce(n, m); });
    const auto ia = oracle::count_subfamilies(
        n, [](oracle::Word m) { return oracle::intersecting_antichain(m); });
    const auto ac = brute_antichains(n);
    const std::string at = " at n=" + std::to_string(n);
    o.expect(count_linear(g) == lin, "linear" + at);
    o.expect(count_scarce(g) == sca, "scarce" + at);
    o.expect(count_intersecting_antichains(g) == ia, "intersecting" + at);
    o.expect(count_antichains(g) == ac, "antichains" + at);
    o.expect(brute_force_families(g, is_linear) == lin, "library oracle" + at);
    if (n == 1) o.expect(lin == 2, "oracle count_linear(1)");
    if (n == 2) {
      o.expect(lin == 5, "oracle count_linear(2)");
      o.expect(sca == 4, "oracle count_scarce(2)");
    }
    if (n == 3) {
      o.expect(ia == 12, "oracle count_intersecting_antichains(3)");
      o.expect(ac == 20, "oracle count_antichains(3)");
    }
    if (n == 4) o.expect(ac == 168, "oracle count_antichains(4)");
  }
}

void scarce_is_intersecting(Outcome& o) {
  for (int n = 1; n <= 4; ++n) o.expect(scarce_equivalence_check(GroundScale(n)));
}

void intersecting_lower_bound(Outcome& o) {
  for (int n = 1; n <= 5; ++n) {
    const GroundScale g(n);
    const BigInt count = count_intersecting_antichains(g);
    const BigInt bound = BigInt(1)
                         << static_cast<unsigned>(binomial(n, (n + 2) / 2));
    o.expect(count >= bound, "A_I(" + std::to_string(n) + ") = " + str(count) +
                                 " below " + str(bound));
    const SetFamily middle = middle_layer_family(g);
    const auto& m = middle.members();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m.size());
         ++pick) {
      std::vector<SubsetWord> sub;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if ((pick >> i) & 1U) sub.push_back(m[i]);
      }
      const SetFamily b(g, sub);
      o.expect(is_intersecting_antichain(b),
               "middle-layer subfamily " + b.to_string());
    }
  }
}

void compression(Outcome& o) {
  for (int n = 1; n <= 4; ++n) {
    const GroundScale g(n);
    o.expect(verify_phi_properties(g));
    std::set<FiberKey> keys;
    std::uint64_t total = 0;
    enumerate_linear(g, [&](const SetFamily& b) {
      ++total;
      o.expect(is_scarce(phi_compress(b)), "phi of " + b.to_string());
      o.expect(keys.insert(fiber_key(b)).second,
               "fiber key collision at " + b.to_string());
    });
    const BigInt bound = count_scarce(g)
                         << static_cast<unsigned>(small_side_family(g).size());
    o.expect(BigInt(total) <= bound,
             "counting inequality at n=" + std::to_string(n));
  }
}

void triple_claim(Outcome& o) {
  for (int n = 2; n <= 4; ++n) o.expect(verify_triple_claim(GroundScale(n)));
}

void extensions(Outcome& o) {
  for (int n = 1; n <= 4; ++n) {
    const GroundScale g(n);
    const ExtensionEnumeration all = enumerate_extensions(g);
    o.expect(all.report);
    o.expect(BigInt(all.extensions.size()) == count_linear(g),
             "extension count at n+1=" + std::to_string(n + 1));
    std::set<std::vector<std::uint8_t>> tables;
    for (const auto& x : all.extensions) {
      tables.insert(x.matroid.rank_table());
      o.expect(verify_matroid_axioms(
          [&](std::uint64_t a) { return x.matroid.rank(a); },
          x.matroid.ground_size()));
      const DeletionCheck d = deletion_check(x.matroid);
      o.expect(d.report);
      o.expect(d.e_class != ElementClass::kColoop,
               "coloop from " + x.family.to_string());
    }
    o.expect(tables.size() == all.extensions.size(),
             "repeated rank table at n+1=" + std::to_string(n + 1));
    if (n == 2) {
      int free_count = 0, parallel = 0, loops = 0;
      for (const auto& x : all.extensions) {
        if (x.e_class == ElementClass::kLoop) {
          ++loops;
        } else if (parallel_edges(x.matroid).size() == 1) {
          ++parallel;
        } else if (parallel_edges(x.matroid).empty()) {
          ++free_count;
        }
      }
      o.expect(free_count == 1 && parallel == 3 && loops == 1,
               "K_3 extensions do not split 1 free, 3 parallel, 1 loop");
    }
  }
}

void antichain_benchmark(Outcome& o) {
  const BigInt five = count_antichains(GroundScale(5));
  const std::uint64_t reference = oracle::reference_antichain_count(5);
  o.expect(five == 7581 && five == reference,
           "count_antichains(5) = " + str(five) + ", reference " +
               std::to_string(reference));
  RunOptions budget;
  budget.deadline = Clock::now() + std::chrono::seconds(60);
  const BigInt six = count_antichains(GroundScale(6), budget);
  RunOptions parallel = budget;
  parallel.threads = 4;
  const BigInt six_again = count_antichains(GroundScale(6), parallel);
  o.expect(six == six_again, "count_antichains(6) differs across runs");
  o.expect(six == 7828354, "count_antichains(6) = " + str(six));
}

void determinism(Outcome& o) {
  using Counter = std::function<BigInt(const RunOptions&)>;
  const std::vector<std::pair<std::string, Counter>> counters = {
      {"linear(5)",
       [](const RunOptions& r) { return count_linear(GroundScale(5), r); }},
      {"scarce(5)",
       [](const RunOptions& r) { return count_scarce(GroundScale(5), r); }},
      {"intersecting(6)",
       [](const RunOptions& r) {
         return count_intersecting_antichains(GroundScale(6), r);
       }},
      {"antichains(6)",
       [](const RunOptions& r) { return count_antichains(GroundScale(6), r); }},
  };
  for (const auto& [name, count] : counters) {
    RunOptions one;
    const BigInt base = count(one);
    for (unsigned t : {4U, 16U}) {
      RunOptions many;
      many.threads = t;
      o.expect(count(many) == base,
               name + " changes with " + std::to_string(t) + " threads");
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0 means no limit
    void (*body)(Outcome&);
  };
  const Criterion criteria[] = {
      {1, "counts agree with brute-force oracles, n <= 4", 10,
       counting_oracles},
      {2, "scarce iff intersecting antichain, n <= 4", 30,
       scarce_is_intersecting},
      {3, "intersecting-antichain lower bound and middle layer, n <= 5", 0,
       intersecting_lower_bound},
      {4, "compression map: scarce image, injective keys, count bound", 60,
       compression},
      {5, "3-partition flats and related triples, n+1 in 3..5", 0,
       triple_claim},
      {6, "extensions of M(K_{n+1}) match linear families, n+1 <= 5", 300,
       extensions},
      {7, "antichain counts for n = 5 and n = 6", 60, antichain_benchmark},
      {8, "counts independent of thread count (1, 4, 16)", 0, determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    const auto start = Clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      outcome.expect(false, "took " + std::to_string(seconds) + " s");
    }
    if (!outcome.ok()) ++failed;
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n",
                outcome.ok() ? "PASS" : "FAIL", c.id, c.title, seconds,
                outcome.ok() ? "" : " -- ", outcome.problem().c_str());
  }
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
