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

// qgame classify <file>
// qgame analyze  <file> --gamma <v>
// qgame sweep    <file> --out <path>
// qgame verify   <file> --gamma <v> --grid <n> [--extra-profile a1,b1,phi]...

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgame/cli_commands.hpp"

namespace {

using qgame::cli::kExitInputError;

qgame::StrategyProfile parse_profile(const std::string& text) {
  std::vector<double> v;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    v.push_back(qgame::parse_angle(text.substr(start, comma == std::string::npos ? std::string::npos
                                                                                   : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (v.size() != 3) throw std::invalid_argument("--extra-profile expects alpha1,beta1,phi");
  return {v[0], v[1], v[2], {}, {}};
}

double pick_gamma(const std::optional<std::string>& flag, const qgame::GameSpec& spec) {
  if (flag) return qgame::parse_angle(*flag);
  if (spec.gammas.size() == 1) return spec.gammas.front();
  throw qgame::UsageError("--gamma is required (the file does not give a single gamma)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibria of symmetric 2x2 quantum games in Schmidt form"};
  app.require_subcommand(1);

  qgame::cli::Options opt;
  app.add_flag("--include-rejected-typeiv", opt.include_rejected_typeiv,
               "Report the rejected alpha1 = beta1 family at gamma = pi/2");
  app.add_option("--tol", opt.tol, "Allowed best-response gain in verify")
      ->check(CLI::PositiveNumber);

  std::string file;
  std::optional<std::string> gamma;
  std::string out_path;
  int grid = 32;
  std::vector<std::string> extra;

  auto* classify = app.add_subcommand("classify", "Family tag and coefficients");
  classify->add_option("file", file, "Game file")->required();

  auto* analyze = app.add_subcommand("analyze", "Equilibria at one gamma, as JSON lines");
  analyze->add_option("file", file, "Game file")->required();
  analyze->add_option("--gamma", gamma, "Entanglement angle (radians or pi-fraction)");

  auto* sweep = app.add_subcommand("sweep", "CSV table over the file's gamma grid");
  sweep->add_option("file", file, "Game file")->required();
  sweep->add_option("--out", out_path, "Output CSV path")->required();

  auto* verify = app.add_subcommand("verify", "Numeric best-response and completeness checks");
  verify->add_option("file", file, "Game file")->required();
  verify->add_option("--gamma", gamma, "Entanglement angle (radians or pi-fraction)");
  verify->add_option("--grid", grid, "Lattice size (>= 16)");
  verify->add_option("--extra-profile", extra, "Additional profile alpha1,beta1,phi to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    const auto spec = qgame::load_game_spec(file);
    if (*classify) return qgame::cli::cmd_classify(spec, std::cout);
    if (*analyze) return qgame::cli::cmd_analyze(spec, pick_gamma(gamma, spec), opt, std::cout);
    if (*sweep) return qgame::cli::cmd_sweep(spec, out_path, opt, std::cout, std::cerr);
    if (*verify) {
      std::vector<qgame::StrategyProfile> profiles;
      for (const auto& e : extra) profiles.push_back(parse_profile(e));
      return qgame::cli::cmd_verify(spec, pick_gamma(gamma, spec), grid, opt, profiles, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
