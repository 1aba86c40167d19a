// Copyright 2026 The teleosched Authors
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

// End-to-end runs of the installed CLI binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const std::string& temp_dir() {
  static const std::string dir = [] {
    char pattern[] = "/tmp/teleosched_cli_XXXXXX";
    const char* made = mkdtemp(pattern);
    REQUIRE(made != nullptr);
    return std::string(made);
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  const std::string out_path = temp_dir() + "/stdout";
  const std::string err_path = temp_dir() + "/stderr";
  const std::string command = std::string(TELEOSCHED_CLI) + " " + args +
                              " >" + out_path + " 2>" + err_path;
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

// strips the wall_ms column (index 7) so reruns compare byte-exact
std::string without_wall_column(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream cells_in(line);
    std::string cell;
    while (std::getline(cells_in, cell, ',')) cells.push_back(cell);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i == 7) continue;
      out += cells[i];
      out += ',';
    }
    out += '\n';
  }
  return out;
}

}  // namespace

TEST_CASE("generate writes deterministic instance files") {
  const std::string dir = temp_dir() + "/gen";
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
  const RunResult first =
      run_cli("generate -K 3 -N 4 --count 5 --seed 7 -o " + dir);
  CHECK(first.exit_code == 0);
  for (int seed = 7; seed < 12; ++seed) {
    CHECK(!slurp(dir + "/instance_" + std::to_string(seed) + ".json").empty());
  }
  const std::string before = slurp(dir + "/instance_9.json");
  const RunResult second =
      run_cli("generate -K 3 -N 4 --count 5 --seed 7 -o " + dir);
  CHECK(second.exit_code == 0);
  CHECK(slurp(dir + "/instance_9.json") == before);
}

TEST_CASE("generate rejects zero robots") {
  CHECK(run_cli("generate -K 0 -N 4").exit_code == 1);
}

TEST_CASE("an unwritable output directory is a runtime failure") {
  CHECK(run_cli("generate -K 2 -N 2 --count 1 --seed 1 -o /nonexistent/dir")
            .exit_code == 2);
}

TEST_CASE("solve reports the solver outcome") {
  const std::string dir = temp_dir();
  REQUIRE(run_cli("generate -K 2 -N 5 --count 1 --seed 21 -o " + dir)
              .exit_code == 0);
  const std::string instance = dir + "/instance_21.json";

  const RunResult greedy =
      run_cli("solve " + instance + " --solver iterative-greedy");
  CHECK(greedy.exit_code == 0);
  CHECK(greedy.out.find("makespan:") != std::string::npos);
  CHECK(greedy.out.find("schedule:") != std::string::npos);

  const RunResult exact = run_cli("solve " + instance +
                                  " --solver exact --time-limit 30");
  CHECK(exact.exit_code == 0);
  CHECK(exact.out.find("proved optimal: yes") != std::string::npos);

  const RunResult unknown =
      run_cli("solve " + instance + " --solver anneal");
  CHECK(unknown.exit_code == 1);
  CHECK(unknown.err.find("anneal") != std::string::npos);

  CHECK(run_cli("solve " + dir + "/missing.json").exit_code == 1);
}

TEST_CASE("solve writes timeline and LP side outputs") {
  const std::string dir = temp_dir();
  REQUIRE(run_cli("generate -K 2 -N 3 --count 1 --seed 5 -o " + dir)
              .exit_code == 0);
  const std::string instance = dir + "/instance_5.json";
  const std::string timeline = dir + "/timeline.csv";
  const std::string lp = dir + "/model.lp";

  const RunResult run = run_cli("solve " + instance +
                                " --solver iterative-greedy --timeline " +
                                timeline + " --emit-lp " + lp);
  CHECK(run.exit_code == 0);
  const std::string csv = slurp(timeline);
  CHECK(csv.find("record,robot,task,operator,teleoperated,start,finish") == 0);
  const std::string model = slurp(lp);
  CHECK(model.find("Minimize\n obj: mu\nSubject To\n") != std::string::npos);
  CHECK(model.rfind("End\n") == model.size() - 4);
}

TEST_CASE("solve honors the epsilon and operator flags") {
  const std::string dir = temp_dir();
  REQUIRE(run_cli("generate -K 2 -N 3 --count 1 --seed 6 -o " + dir)
              .exit_code == 0);
  const std::string instance = dir + "/instance_6.json";
  CHECK(run_cli("solve " + instance + " --epsilon min-beta").exit_code == 0);
  CHECK(run_cli("solve " + instance + " --epsilon 2.5").exit_code == 0);
  CHECK(run_cli("solve " + instance + " --epsilon nonsense").exit_code == 1);
  CHECK(run_cli("solve " + instance + " --solver exact --operators 2")
            .exit_code == 0);
}

TEST_CASE("bench emits reproducible CSV plus a recomputable summary") {
  const std::string csv_path = temp_dir() + "/bench.csv";
  const RunResult first = run_cli(
      "bench -K 2 -N 4 --count 6 --seed 11 --with-exact --time-limit 30 -o " +
      csv_path);
  CHECK(first.exit_code == 0);
  const std::string csv = slurp(csv_path);
  CHECK(csv.find("seed,solver,K,N,makespan,optimal_makespan,ratio,wall_ms,"
                 "steps") == 0);

  // 6 instances x (exact + iterative-greedy)
  int rows = -1;  // header
  std::istringstream lines(csv);
  std::string line;
  double ratio_sum = 0;
  int ratio_rows = 0;
  int within = 0;
  while (std::getline(lines, line)) {
    ++rows;
    if (rows == 0) continue;
    std::vector<std::string> cells;
    std::istringstream cells_in(line);
    std::string cell;
    while (std::getline(cells_in, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 9);
    if (cells[1] == "iterative-greedy") {
      ratio_sum += std::stod(cells[6]);
      ++ratio_rows;
      if (std::stod(cells[4]) <= 1.05 * std::stod(cells[5])) ++within;
    }
  }
  CHECK(rows == 12);
  REQUIRE(ratio_rows == 6);

  // summary echoes the row-level arithmetic
  std::ostringstream expected;
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%10.6f", ratio_sum / ratio_rows);
  expected << "iterative-greedy       " << buffer;
  CHECK(first.out.find(expected.str()) != std::string::npos);
  CHECK(first.out.find(std::to_string(within) + "/6") != std::string::npos);

  // byte-identical rerun, wall-time column aside
  const RunResult second = run_cli(
      "bench -K 2 -N 4 --count 6 --seed 11 --with-exact --time-limit 30 -o " +
      csv_path);
  CHECK(second.exit_code == 0);
  CHECK(without_wall_column(slurp(csv_path)) == without_wall_column(csv));
}

TEST_CASE("bench covers the no-exact protocol with one row per solver") {
  const std::string csv_path = temp_dir() + "/bench_one.csv";
  const RunResult run = run_cli("bench -K 2 -N 6 --count 1 --seed 3 -o " +
                                csv_path);
  CHECK(run.exit_code == 0);
  const std::string csv = slurp(csv_path);
  for (const char* solver :
       {"naive-greedy", "comparison-greedy", "greedy-insertion",
        "naive+iterative", "comparison+iterative", "iterative-greedy"}) {
    CHECK(csv.find(std::string(",") + solver + ",") != std::string::npos);
  }
  int rows = -1;
  std::istringstream lines(csv);
  std::string line;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 6);
  // without exact the iterative-greedy row anchors ratio 1
  CHECK(csv.find("iterative-greedy,2,6") != std::string::npos);
  CHECK(run.out.find("relative to iterative-greedy") != std::string::npos);
}

TEST_CASE("bench json format") {
  const RunResult run = run_cli("bench -K 2 -N 3 --count 2 --seed 4 "
                                "--format json");
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("\"rows\"") != std::string::npos);
  CHECK(run.out.find("\"summary\"") != std::string::npos);
  CHECK(run_cli("bench --format yaml").exit_code == 1);
}

TEST_CASE("reduce builds, saves and verifies") {
  const std::string formula = temp_dir() + "/formula.cnf";
  {
    std::ofstream out(formula);
    out << "c fixture\np cnf 4 4\n1 2 -3\n1 3 -4\n2 4 -1\n3 4 -2\n";
  }
  const std::string instance = temp_dir() + "/reduced.json";
  const RunResult run = run_cli("reduce " + formula +
                                " --z 100 --dz 1 -o " + instance +
                                " --verify");
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("target: 800.00") != std::string::npos);
  CHECK(run.out.find("satisfiable: yes") != std::string::npos);
  CHECK(run.out.find("equivalence: confirmed") != std::string::npos);
  CHECK(!slurp(instance).empty());

  // the reduced instance is solvable like any other
  CHECK(run_cli("solve " + instance + " --solver exact").exit_code == 0);

  const std::string bad = temp_dir() + "/bad.cnf";
  {
    std::ofstream out(bad);
    out << "p qqq\n";
  }
  const RunResult broken = run_cli("reduce " + bad);
  CHECK(broken.exit_code == 1);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("solve").exit_code == 1);
  CHECK(run_cli("bench -K 2 -N 3 --count 1 --solvers pancake").exit_code ==
        1);
}
