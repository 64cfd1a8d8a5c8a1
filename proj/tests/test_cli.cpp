// Copyright 2026 The candidatesort Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// End-to-end checks that spawn the installed command-line binary (path
// injected at compile time as CSORT_CLI_PATH).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "csort/graph.hpp"
#include "csort/graph_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* cli_path() { return CSORT_CLI_PATH; }

struct RunResult {
  int exit_code;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs the CLI with the given arguments, capturing stdout+stderr.
RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path log =
      fs::temp_directory_path() / ("csort_cli_log_" +
                                   std::to_string(::getpid()) + "_" +
                                   std::to_string(counter++) + ".txt");
  const std::string cmd =
      std::string(cli_path()) + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(log);
  fs::remove(log);
  return result;
}

fs::path temp_file(const char* name) {
  return fs::temp_directory_path() /
         (std::string("csort_cli_") + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("gen writes a valid banded graph with meta") {
  const fs::path out = temp_file("banded.json");
  const RunResult r = run_cli("gen --model banded --n 50 --nu 3 --seed 1 --out " +
                              out.string());
  CHECK(r.exit_code == 0);

  const csort::GraphFile file = csort::read_graph_file(out.string());
  CHECK(file.graph.pair_count() == 50 * 49 / 2);
  REQUIRE(file.truth.has_value());
  CHECK(csort::validate_nu_ambiguous(file.graph, *file.truth,
                                     csort::AmbiguityParams{3, 3})
            .ok());
  REQUIRE(file.meta.has_value());
  CHECK(file.meta->model == "banded");
  CHECK(file.meta->nu == 3);

  // Round-trip fidelity: re-serializing reproduces the file bytes.
  CHECK(csort::serialize_graph(file.graph, &*file.truth, &*file.meta) ==
        slurp(out));
  fs::remove(out);
}

TEST_CASE("sort reports a clean run on a banded file") {
  const fs::path graph = temp_file("sortme.json");
  const fs::path report = temp_file("report.json");
  REQUIRE(run_cli("gen --model banded --n 100 --nu 3 --seed 2 --out " +
                  graph.string())
              .exit_code == 0);
  const RunResult r = run_cli("sort --in " + graph.string() +
                              " --nu-plus 3 --nu-minus 3 --report " +
                              report.string());
  CHECK(r.exit_code == 0);

  const json rep = json::parse(slurp(report));
  CHECK(rep["verifications"] == 0);
  CHECK(rep["correct"] == true);
  CHECK(rep["app"] == 100);
  CHECK(rep["order"].size() == 100);
  CHECK(rep["trace"].size() == 100);
  fs::remove(graph);
  fs::remove(report);
}

TEST_CASE("redacted files cannot be sorted") {
  const fs::path graph = temp_file("redacted.json");
  REQUIRE(run_cli("gen --model banded --n 20 --nu 2 --seed 3 --redact --out " +
                  graph.string())
              .exit_code == 0);
  const csort::GraphFile file = csort::read_graph_file(graph.string());
  CHECK_FALSE(file.truth.has_value());

  const RunResult r =
      run_cli("sort --in " + graph.string() + " --nu-plus 2 --nu-minus 2");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("no ground-truth") != std::string::npos);
  fs::remove(graph);
}

TEST_CASE("a tight budget aborts with a partial report and exit 2") {
  const fs::path graph = temp_file("hard.json");
  const fs::path report = temp_file("hard_report.json");
  REQUIRE(run_cli("gen --model lowerbound --n 12 --gamma 2 --out " +
                  graph.string())
              .exit_code == 0);

  const csort::GraphFile file = csort::read_graph_file(graph.string());
  REQUIRE(file.meta.has_value());
  CHECK(file.meta->k == 2);
  CHECK(file.meta->ambiguous_simple == 4);
  REQUIRE(file.meta->swap_pairs.size() == 2);

  const RunResult r = run_cli("sort --in " + graph.string() +
                              " --nu-plus 2 --nu-minus 2 --budget 1 --report " +
                              report.string());
  CHECK(r.exit_code == 2);
  const json rep = json::parse(slurp(report));
  CHECK(rep["correct"] == false);
  CHECK(rep["order"].is_null());
  CHECK(rep["verifications"] == 1);
  CHECK(rep.contains("error"));

  // Unlimited budget sorts it with at least k verifications.
  const fs::path full = temp_file("full_report.json");
  CHECK(run_cli("sort --in " + graph.string() +
                " --nu-plus 2 --nu-minus 2 --report " + full.string())
            .exit_code == 0);
  const json ok = json::parse(slurp(full));
  CHECK(ok["correct"] == true);
  CHECK(ok["verifications"].get<int>() >= 2);
  fs::remove(graph);
  fs::remove(report);
  fs::remove(full);
}

TEST_CASE("experiment runs a config to a deterministic CSV") {
  const fs::path cfg = temp_file("cfg.json");
  const fs::path csv1 = temp_file("r1.csv");
  const fs::path csv2 = temp_file("r2.csv");
  {
    std::ofstream out(cfg);
    out << R"({"model":"banded","n":[15,30],"nu":[1,4],"trials":3,"seed":8})";
  }
  CHECK(run_cli("experiment --config " + cfg.string() + " --out " +
                csv1.string())
            .exit_code == 0);
  CHECK(run_cli("experiment --config " + cfg.string() + " --out " +
                csv2.string())
            .exit_code == 0);

  std::istringstream in(slurp(csv1));
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "model,n,nu_plus,nu_minus,k,delta,r,gamma,seed,verifications,app,"
        "ambiguous_simple,bound,ms");
  int rows = 0;
  for (std::string line; std::getline(in, line);) {
    ++rows;
    // verifications column (10th) is always 0 for banded sweeps.
    std::istringstream cells(line);
    std::string cell;
    for (int i = 0; i < 10; ++i) std::getline(cells, cell, ',');
    CHECK(cell == "0");
  }
  CHECK(rows == 2 * 2 * 3);

  // Identical configs agree byte-for-byte once ms is stripped.
  auto strip_ms = [](const std::string& text) {
    std::istringstream lines(text);
    std::string out, line;
    while (std::getline(lines, line)) out += line.substr(0, line.rfind(','));
    return out;
  };
  CHECK(strip_ms(slurp(csv1)) == strip_ms(slurp(csv2)));
  fs::remove(cfg);
  fs::remove(csv1);
  fs::remove(csv2);
}

TEST_CASE("schema violations and unknown flags exit 1") {
  const fs::path cfg = temp_file("bad_cfg.json");
  {
    std::ofstream out(cfg);
    out << R"({"model":"banded","n":[10],"nu":[2],"delta":[1]})";
  }
  CHECK(run_cli("experiment --config " + cfg.string()).exit_code == 1);
  fs::remove(cfg);

  CHECK(run_cli("gen --model banded --n 10 --delta 2 --nu 1 --out x.json")
            .exit_code == 1);
  CHECK(run_cli("gen --model banded --n 10 --nu 1 --frobnicate --out x.json")
            .exit_code == 1);
  CHECK(run_cli("dance").exit_code == 1);
  CHECK(run_cli("sort --in /nonexistent.json --nu-plus 1 --nu-minus 1")
            .exit_code == 1);
  CHECK(run_cli("gen --model lowerbound --n 10 --gamma 4 --out x.json")
            .exit_code == 1);
}

TEST_CASE("selfcheck passes on a fresh build") {
  const RunResult r = run_cli("selfcheck");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("selfcheck passed") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}
