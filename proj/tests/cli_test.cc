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

// Runs the built clique-ext binary and checks its output and exit codes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + " \"" CLIQUE_EXT_CLI "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), got);
  }
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "clique_ext_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("count verb") {
  Run r = run("count --what linear -n 2");
  CHECK(r.status == 0);
  CHECK(r.out == "5\n");
  r = run("count --what intersecting -n 3 --oracle");
  CHECK(r.status == 0);
  CHECK(r.out.starts_with("12\n"));
  CHECK(run("count --what scarce -n 4").out == "81\n");
  CHECK(run("count --what antichains -n 4 --oracle").out.starts_with("168\n"));
  CHECK(run("count --what linear -n 3 --oracle").status == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("").status == 2);
  CHECK(run("count --what nonsense -n 2").status == 2);
  CHECK(run("count --what linear -n 0").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("count --what linear -n 6").status == 3);
  CHECK(run("extend -n 5").status == 3);
  CHECK(run("report --n-min 1 --n-max 2 --format xml").status == 2);
  CHECK(run("count --what linear -n 6 --force",
            "CLIQUE_EXT_TIME_BUDGET_SECS=0.001")
            .status == 3);
  CHECK(run("count --what linear -n 2", "CLIQUE_EXT_TIME_BUDGET_SECS=0")
            .status == 2);
  CHECK(run("count --what linear -n 2", "CLIQUE_EXT_TIME_BUDGET_SECS=60")
            .out == "5\n");
}

TEST_CASE("verify verb") {
  Run r = run("verify --suite triples -n 4");
  CHECK(r.status == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(run("verify --suite all -n 3").status == 0);
  CHECK(run("verify --suite phi -n 4").status == 0);
  CHECK(run("verify --suite bijection -n 4").status == 0);
  CHECK(run("verify --suite axioms -n 3").status == 0);
}

TEST_CASE("threads do not change counts") {
  for (const char* what : {"linear", "scarce", "antichains", "intersecting"}) {
    const std::string base =
        run(std::string("count --what ") + what + " -n 5 --threads 1").out;
    CHECK_FALSE(base.empty());
    for (const char* t : {"4", "16"}) {
      CHECK(run(std::string("count --what ") + what + " -n 5 --threads " + t)
                .out == base);
    }
  }
}

TEST_CASE("output files are byte-identical across runs") {
  const auto a = scratch("a.txt");
  const auto b = scratch("b.txt");
  CHECK(run("enumerate --what linear -n 4 --out " + a.string()).status == 0);
  CHECK(run("enumerate --what linear -n 4 --threads 4 --out " + b.string())
            .status == 0);
  CHECK(slurp(a) == slurp(b));
  std::size_t families = 0;
  std::istringstream lines(slurp(a));
  for (std::string line; std::getline(lines, line);) {
    if (!line.starts_with("#")) ++families;
  }
  CHECK(families == 137);

  CHECK(run("extend -n 3 --out " + a.string()).status == 0);
  CHECK(run("extend -n 3 --out " + b.string()).status == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("\"count\": \"19\"") != std::string::npos);

  CHECK(run("report --n-min 1 --n-max 5 --format csv --out " + a.string())
            .status == 0);
  CHECK(run("report --n-min 1 --n-max 5 --format csv --out " + b.string())
            .status == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("2,1,2,2,1,4,5,1.000000,1.160964") != std::string::npos);
  std::filesystem::remove_all(a.parent_path());
}
