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

#ifndef CLIQUE_EXT_BOUNDS_REPORT_H_
#define CLIQUE_EXT_BOUNDS_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clique_ext/subset_core.h"
#include "clique_ext/verification.h"

namespace clique_ext {

struct BoundRow {
  int n = 0;
  BigInt lower_exp;     // C(n, ceil((n+1)/2))
  BigInt middle_exp;    // C(n, floor(n/2))
  BigInt overhead_exp;  // 2 * sum_{k <= floor(n/3)} C(n, k)
  BigInt small_side;    // |S(n)|
  std::optional<BigInt> count_scarce;
  std::optional<BigInt> count_linear;
};

// Exact |S(n)| without listing it; valid for every 1 <= n <= 64.
BigInt small_side_size(int n);

// Fills the exponent columns for n and attaches whichever counts are known.
BoundRow bound_row(int n, std::optional<BigInt> count_scarce = std::nullopt,
                   std::optional<BigInt> count_linear = std::nullopt);

// lower_exp <= middle_exp, small_side <= overhead_exp, and, for the counts
// that are present,
//   2^lower_exp <= count_scarce <= count_linear <= count_scarce * 2^small_side.
// A failure here would contradict one of the bounds being reproduced.
VerificationReport validate_row(const BoundRow& row);

// log2(count) / C(n, floor(n/2)) per n; absent counts give absent ratios.
struct TrendRow {
  int n = 0;
  std::optional<double> ratio_scarce;
  std::optional<double> ratio_linear;
};

TrendRow trend_row(const BoundRow& row);
std::vector<TrendRow> trend_table(const std::vector<BoundRow>& rows);

// log2 of a positive integer, to double precision.
double log2_of(const BigInt& value);

// Columns: n, lower_exp, middle_exp, overhead_exp, small_side, count_scarce,
// count_linear, ratio_scarce, ratio_linear. Integers are exact decimal
// strings, ratios carry 6 decimals, missing values read "uncomputed".
// Throws InputError unless format is "json" or "csv".
std::string emit_report(const std::vector<BoundRow>& rows,
                        std::string_view format);

}  // namespace clique_ext

#endif  // CLIQUE_EXT_BOUNDS_REPORT_H_
