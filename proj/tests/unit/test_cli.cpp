// Copyright 2026 The qgame Authors
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

// Runs the qgame executable on the files in tests/data.

#include <doctest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qgame/cli_commands.hpp"

using namespace qgame;
using Json = nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QGAME_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(QGAME_TEST_DATA) + "/" + name; }

std::vector<Json> json_lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(Json::parse(line));
  return out;
}

std::vector<Json> records(const std::vector<Json>& all, const std::string& kind) {
  std::vector<Json> out;
  for (const auto& j : all)
    if (j["record"] == kind) out.push_back(j);
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE("classify") {
  const auto r = run("classify " + data("chicken.game"));
  CHECK(r.status == 0);
  CHECK(r.out.find("Chicken; a00=2; a03=1.5; a30=0; a33=-0.5; s=0; t=-3") != std::string::npos);

  const auto d = run("classify " + data("degenerate.game"));
  CHECK(d.status == 0);
  CHECK(d.out.find("Degenerate: a33=0, a30=0 - all strategies are QNE at every gamma") != std::string::npos);
  CHECK(d.out.find("s=undefined") != std::string::npos);
}

TEST_CASE("malformed input exits with status 2") {
  const auto r = run("classify " + data("bad_matrix.game"));
  CHECK(r.status == 2);
  CHECK(r.out.find("A11") != std::string::npos);
  CHECK(r.out.find(":2:") != std::string::npos);
  CHECK(run("classify /nonexistent.game").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("analyze " + data("chicken.game") + " --gamma 5").status == 2);
}

TEST_CASE("analyze Chicken at maximal entanglement") {
  const auto r = run("analyze " + data("chicken.game") + " --gamma pi/2");
  REQUIRE(r.status == 0);
  const auto all = json_lines(r.out);
  REQUIRE_FALSE(all.empty());
  CHECK(all.front()["record"] == "header");
  CHECK(all.front()["family"] == "Chicken");
  const auto q = records(all, "qne");
  std::set<std::string> labels;
  for (const auto& j : q) {
    labels.insert(j["label"].get<std::string>());
    CHECK(j["payoff_a"].get<double>() == doctest::Approx(2.5));
    CHECK(j["payoff_b"].get<double>() == doctest::Approx(2.5));
  }
  CHECK(labels == std::set<std::string>{"I(0,1)", "I(1,0)", "II(p=1)", "IV_sum"});
}

TEST_CASE("analyze PD at gamma = 0") {
  const auto r = run("analyze " + data("pd.game"));
  REQUIRE(r.status == 0);
  const auto q = records(json_lines(r.out), "qne");
  REQUIRE(q.size() == 1);
  CHECK(q[0]["label"] == "I(1,1)");
  CHECK(q[0]["payoff_a"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("analyze Stag Hunt inside the risk-dominance window") {
  char arg[64];
  std::snprintf(arg, sizeof arg, "%.17g", 2 * std::atan(0.45));
  const auto r = run("analyze " + data("sh.game") + " --gamma " + arg);
  REQUIRE(r.status == 0);
  const auto all = json_lines(r.out);
  std::set<std::string> labels;
  for (const auto& j : records(all, "qne")) labels.insert(j["label"].get<std::string>());
  CHECK(labels == std::set<std::string>{"I(0,0)", "I(1,1)", "II(p=0)"});
  const auto rd = records(all, "risk_dominance");
  REQUIRE(rd.size() == 1);
  CHECK(rd[0]["ordering"] == "weakened-order");
  CHECK(rd[0]["criterion_vs_11"].get<double>() > 0.0);
}

TEST_CASE("analyze output is byte-identical across runs") {
  const std::string args = "analyze " + data("sh.game") + " --gamma 0.7";
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("sweep Chicken") {
  const auto out = std::filesystem::temp_directory_path() / "qgame_test_sweep.csv";
  const auto r = run("sweep " + data("chicken_sweep.game") + " --out " + out.string());
  REQUIRE(r.status == 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "gamma,r,H_plus,H_minus,F,G,I00,I01,I10,I11,II,III,IV,qne,dilemmas,boundary");
  const auto cols = split_csv(header);
  const auto ii = std::find(cols.begin(), cols.end(), "II") - cols.begin();
  std::vector<double> col;
  std::string line;
  while (std::getline(in, line)) col.push_back(std::stod(split_csv(line)[ii]));
  const double want[] = {2.0, 2.35355339059, 2.5, 2.35355339059, 2.0};
  REQUIRE(col.size() == 5);
  for (int k = 0; k < 5; ++k) CHECK(col[k] == doctest::Approx(want[k]).epsilon(1e-10));
  std::filesystem::remove(out);
}

TEST_CASE("sweep needs at least two gamma values") {
  const auto r = run("sweep " + data("single_gamma.game") + " --out /tmp/qgame_unused.csv");
  CHECK(r.status == 2);
  CHECK(r.out.find("analyze") != std::string::npos);
  CHECK(run("sweep " + data("chicken_sweep.game") + " --out /nonexistent/dir/x.csv").status == 2);
}

TEST_CASE("sweep of the Stag Hunt marks boundaries") {
  const auto out = std::filesystem::temp_directory_path() / "qgame_test_sh.csv";
  REQUIRE(run("sweep " + data("sh.game") + " --out " + out.string()).status == 0);
  std::ifstream in(out);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("sh_risk") != std::string::npos);
  CHECK(text.find("type2_existence") != std::string::npos);
  std::filesystem::remove(out);
}

TEST_CASE("verify Chicken at pi/3") {
  const auto r = run("verify " + data("chicken.game") + " --grid 32");
  CHECK(r.status == 0);
  CHECK(r.out.find("verify: PASS") != std::string::npos);
}

TEST_CASE("verify rejects an injected non-equilibrium") {
  const auto r = run("verify " + data("chicken.game") + " --grid 32 --extra-profile 0,0,0");
  CHECK(r.status == 1);
  CHECK(r.out.find("extra") != std::string::npos);
  CHECK(r.out.find("FAIL gain_a=") != std::string::npos);
}

TEST_CASE("verify the both-degenerate game") {
  const auto r = run("verify " + data("degenerate.game") + " --grid 24");
  CHECK(r.status == 0);
  CHECK(r.out.find("all strategies") != std::string::npos);
}
