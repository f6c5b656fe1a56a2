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

#include "clique_ext/bounds_report.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"

#include "clique_ext/errors.h"

namespace clique_ext {
namespace {

constexpr std::array<const char*, 9> kColumns = {
    "n",          "lower_exp",    "middle_exp",
    "overhead_exp", "small_side", "count_scarce",
    "count_linear", "ratio_scarce", "ratio_linear"};

constexpr const char* kUncomputed = "uncomputed";

std::string fixed6(std::optional<double> value) {
  if (!value) return kUncomputed;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", *value);
  return buf;
}

std::string count_text(const std::optional<BigInt>& value) {
  return value ? value->str() : kUncomputed;
}

std::vector<std::string> cells(const BoundRow& row) {
  const TrendRow trend = trend_row(row);
  return {std::to_string(row.n),     row.lower_exp.str(),
          row.middle_exp.str(),      row.overhead_exp.str(),
          row.small_side.str(),      count_text(row.count_scarce),
          count_text(row.count_linear), fixed6(trend.ratio_scarce),
          fixed6(trend.ratio_linear)};
}

}  // namespace

BigInt small_side_size(int n) {
  const GroundScale scale(n);
  BigInt total = 0;
  for (int k = 1; k <= scale.n(); ++k) {
    if (std::min(k, n - k) <= n / 3) total += binomial(n, k);
  }
  return total;
}

BoundRow bound_row(int n, std::optional<BigInt> count_scarce,
                   std::optional<BigInt> count_linear) {
  const GroundScale scale(n);
  BoundRow row;
  row.n = scale.n();
  row.lower_exp = binomial(n, (n + 2) / 2);  // ceil((n+1)/2)
  row.middle_exp = binomial(n, n / 2);
  row.overhead_exp = 2 * binomial_sum_le(n, n, 3);
  row.small_side = small_side_size(n);
  row.count_scarce = std::move(count_scarce);
  row.count_linear = std::move(count_linear);
  return row;
}

VerificationReport validate_row(const BoundRow& row) {
  VerificationReport report("bounds n=" + std::to_string(row.n));
  auto expect = [&report](bool ok, const std::string& what) {
    ++report.cases_checked;
    if (!ok) report.fail(what);
  };
  expect(row.lower_exp <= row.middle_exp,
         "lower exponent exceeds the central binomial");
  expect(row.small_side <= row.overhead_exp,
         "|S(n)| exceeds 2 * sum C(n, k <= n/3)");
  if (row.count_scarce) {
    // Counts only exist at desk scale, so the shift is small.
    const BigInt floor = BigInt(1) << static_cast<unsigned>(row.lower_exp);
    expect(floor <= *row.count_scarce,
           "count_scarce " + row.count_scarce->str() + " < 2^" +
               row.lower_exp.str());
  }
  if (row.count_scarce && row.count_linear) {
    expect(*row.count_scarce <= *row.count_linear,
           "count_scarce exceeds count_linear");
    const BigInt ceiling = *row.count_scarce
                           << static_cast<unsigned>(row.small_side);
    expect(*row.count_linear <= ceiling,
           "count_linear " + row.count_linear->str() +
               " exceeds count_scarce * 2^" + row.small_side.str());
  }
  return report;
}

double log2_of(const BigInt& value) {
  if (value <= 0) throw InputError("log2 of a non-positive count");
  const unsigned msb = boost::multiprecision::msb(value);
  if (msb < 53) return std::log2(value.convert_to<double>());
  // Keep the top 53 bits as the mantissa.
  const unsigned shift = msb - 52;
  const BigInt top = value >> shift;
  return std::log2(top.convert_to<double>()) + shift;
}

TrendRow trend_row(const BoundRow& row) {
  TrendRow out{row.n, std::nullopt, std::nullopt};
  const double middle = row.middle_exp.convert_to<double>();
  if (row.count_scarce) out.ratio_scarce = log2_of(*row.count_scarce) / middle;
  if (row.count_linear) out.ratio_linear = log2_of(*row.count_linear) / middle;
  return out;
}

std::vector<TrendRow> trend_table(const std::vector<BoundRow>& rows) {
  std::vector<TrendRow> out;
  for (const auto& row : rows) out.push_back(trend_row(row));
  return out;
}

std::string emit_report(const std::vector<BoundRow>& rows,
                        std::string_view format) {
  if (format == "csv") {
    std::string out;
    for (std::size_t c = 0; c < kColumns.size(); ++c) {
      if (c != 0) out += ',';
      out += kColumns[c];
    }
    out += '\n';
    for (const auto& row : rows) {
      const auto values = cells(row);
      for (std::size_t c = 0; c < values.size(); ++c) {
        if (c != 0) out += ',';
        out += values[c];
      }
      out += '\n';
    }
    return out;
  }
  if (format == "json") {
    // ordered_json keeps the column order stable.
    nlohmann::ordered_json doc;
    doc["columns"] = kColumns;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      const auto values = cells(row);
      nlohmann::ordered_json item;
      item["n"] = row.n;
      for (std::size_t c = 1; c < kColumns.size(); ++c) {
        item[kColumns[c]] = values[c];
      }
      list.push_back(std::move(item));
    }
    doc["rows"] = std::move(list);
    return doc.dump(2) + "\n";
  }
  throw InputError("unknown report format '" + std::string(format) +
                   "' (expected json or csv)");
}

}  // namespace clique_ext
