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

// clique-ext: counts, enumerates and verifies single-element extensions of
// the clique matroid M(K_{n+1}).
//
// Exit codes: 0 success, 1 a verified property failed, 2 usage or input
// error, 3 resource cap or time budget exceeded.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clique_ext/antichain_engine.h"
#include "clique_ext/bounds_report.h"
#include "clique_ext/clique_matroid.h"
#include "clique_ext/crapo_extension.h"
#include "clique_ext/errors.h"
#include "clique_ext/linear_family.h"

namespace {

using namespace clique_ext;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct CommonFlags {
  int n = 0;
  unsigned threads = 1;
  bool force = false;

  RunOptions options() const {
    RunOptions o;
    o.threads = threads;
    o.force = force;
    o.apply_time_budget_from_environment();
    return o;
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool needs_n = true) {
  if (needs_n) {
    cmd->add_option("-n", flags.n,
                    "Subset scale n; the clique is K_{n+1} on n+1 vertices")
        ->required();
  }
  cmd->add_option("--threads", flags.threads, "Worker threads")
      ->check(CLI::Range(1U, 1024U));
  cmd->add_flag("--force", flags.force,
                "Lift the documented feasibility caps (expert use)");
}

// Writes to --out when given, otherwise to stdout.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw InputError("failed writing '" + path + "'");
}

int print_report(const VerificationReport& report) {
  if (report.passed()) {
    std::cout << "PASS " << report.name << " (" << report.cases_checked
              << " cases)\n";
    return kExitOk;
  }
  std::cout << "FAIL " << report.name << " (" << report.failures << " of "
            << report.cases_checked << " cases): "
            << report.witness.value_or("") << "\n";
  return kExitFailed;
}

BigInt engine_count(const std::string& what, GroundScale n,
                    const RunOptions& options) {
  if (what == "linear") return count_linear(n, options);
  if (what == "scarce") return count_scarce(n, options);
  if (what == "antichains") return count_antichains(n, options);
  return count_intersecting_antichains(n, options);
}

BigInt oracle_count(const std::string& what, GroundScale n,
                    const RunOptions& options) {
  if (what == "linear") return brute_force_families(n, is_linear, options);
  if (what == "scarce") return brute_force_families(n, is_scarce, options);
  if (what == "intersecting") {
    return brute_force_families(n, is_intersecting_antichain, options);
  }
  // Antichains of P(n) \ {∅}, plus the lone antichain {∅}.
  return brute_force_families(n, is_antichain, options) + 1;
}

int run_count(const std::string& what, const CommonFlags& flags, bool oracle) {
  const GroundScale n(flags.n);
  const RunOptions options = flags.options();
  const BigInt count = engine_count(what, n, options);
  std::cout << count << "\n";
  if (!oracle) return kExitOk;
  const BigInt expected = oracle_count(what, n, options);
  if (expected != count) {
    std::cout << "oracle disagreement: engine " << count << ", brute force "
              << expected << "\n";
    return kExitFailed;
  }
  std::cerr << "brute-force oracle agrees (" << expected << ")\n";
  return kExitOk;
}

int run_enumerate(const std::string& what, const CommonFlags& flags,
                  const std::string& out_path) {
  const GroundScale n(flags.n);
  const FamilyKind kind =
      what == "linear" ? FamilyKind::kLinear : FamilyKind::kScarce;
  std::ostringstream text;
  std::uint64_t count = 0;
  std::ostringstream body;
  enumerate_families(
      n, kind,
      [&](const SetFamily& b) {
        body << family_line(b) << "\n";
        ++count;
      },
      flags.options());
  text << "# " << what << " families of P([" << n.n() << "]) minus the empty "
       << "set; n=" << n.n() << " count=" << count << "\n"
       << body.str();
  write_output(out_path, text.str());
  if (!out_path.empty()) std::cerr << count << " families written\n";
  return kExitOk;
}

int run_verify(const std::string& suite, const CommonFlags& flags) {
  const GroundScale n(flags.n);
  const RunOptions options = flags.options();
  int status = kExitOk;
  auto note = [&status](const VerificationReport& r) {
    if (print_report(r) != kExitOk) status = kExitFailed;
  };
  const bool all = suite == "all";
  if (all || suite == "triples") note(verify_triple_claim(n));
  if (all || suite == "bijection") {
    note(verify_subclass_correspondence(n, options));
    note(scarce_equivalence_check(n, options));
  }
  if (all || suite == "phi") note(verify_phi_properties(n, options));
  if (all || suite == "axioms") note(enumerate_extensions(n, options).report);
  return status;
}

int run_extend(const CommonFlags& flags, const std::string& out_path) {
  const GroundScale n(flags.n);
  const ExtensionEnumeration all = enumerate_extensions(n, flags.options());
  write_output(out_path, extensions_json(all));
  std::cerr << all.extensions.size() << " extensions of M(K_"
            << n.vertex_count() << ")\n";
  if (!all.report.passed()) {
    print_report(all.report);
    return kExitFailed;
  }
  return kExitOk;
}

int run_report(int n_min, int n_max, const std::string& format,
               const CommonFlags& flags, const std::string& out_path) {
  if (n_min < 1 || n_max < n_min || n_max > GroundScale::kMax) {
    throw InputError("need 1 <= --n-min <= --n-max <= 64");
  }
  const RunOptions options = flags.options();
  std::vector<BoundRow> rows;
  int status = kExitOk;
  for (int k = n_min; k <= n_max; ++k) {
    std::optional<BigInt> scarce;
    std::optional<BigInt> linear;
    if (k <= (flags.force ? 6 : 5)) {
      const GroundScale n(k);
      scarce = count_scarce(n, options);
      linear = count_linear(n, options);
    }
    rows.push_back(bound_row(k, scarce, linear));
    const VerificationReport check = validate_row(rows.back());
    if (!check.passed()) {
      print_report(check);
      status = kExitFailed;
    }
  }
  write_output(out_path, emit_report(rows, format));
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact enumeration and verification of single-element extensions of "
      "M(K_{n+1}). Every verb takes the subset scale n; the clique has n+1 "
      "vertices."};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string what;
  std::string suite = "all";
  std::string out_path;
  std::string format = "json";
  bool oracle = false;
  int n_min = 1;
  int n_max = 5;

  auto* count = app.add_subcommand("count", "Print an exact family count");
  count->add_option("--what", what, "Family kind")
      ->required()
      ->check(CLI::IsMember({"linear", "scarce", "antichains", "intersecting"}));
  count->add_flag("--oracle", oracle,
                  "Also run the brute-force oracle and require agreement");
  add_common(count, flags);

  auto* enumerate = app.add_subcommand("enumerate", "Write a family file");
  enumerate->add_option("--what", what, "Family kind")
      ->required()
      ->check(CLI::IsMember({"linear", "scarce"}));
  enumerate->add_option("--out", out_path, "Output file (default stdout)");
  add_common(enumerate, flags);

  auto* verify = app.add_subcommand("verify", "Run exhaustive checks");
  verify->add_option("--suite", suite, "Which checks to run")
      ->check(CLI::IsMember({"triples", "bijection", "phi", "axioms", "all"}));
  add_common(verify, flags);

  auto* extend = app.add_subcommand(
      "extend",
      "Build every extension of M(K_{n+1}) and write them as JSON");
  extend->add_option("--out", out_path, "Output file (default stdout)");
  add_common(extend, flags);

  auto* report = app.add_subcommand("report", "Emit the bounds table");
  report->add_option("--n-min", n_min, "Smallest n")->required();
  report->add_option("--n-max", n_max, "Largest n")->required();
  report->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  report->add_option("--out", out_path, "Output file (default stdout)");
  add_common(report, flags, /*needs_n=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count) return run_count(what, flags, oracle);
    if (*enumerate) return run_enumerate(what, flags, out_path);
    if (*verify) return run_verify(suite, flags);
    if (*extend) return run_extend(flags, out_path);
    if (*report) return run_report(n_min, n_max, format, flags, out_path);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
