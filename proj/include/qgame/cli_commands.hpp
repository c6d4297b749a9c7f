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

// Command implementations behind the qgame executable. Each returns the
// process exit status: 0 success, 1 verification failure, 2 input error.

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qgame/game_file.hpp"
#include "qgame/qne_solver.hpp"

namespace qgame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

struct Options {
  bool include_rejected_typeiv = false;
  double tol = 1e-6;  // verify: allowed best-response gain
};

int cmd_classify(const GameSpec& spec, std::ostream& out);

/// One JSON object per line: a header, one record per equilibrium, then notes
/// and (for Stag Hunt games) a risk-dominance block.
int cmd_analyze(const GameSpec& spec, double gamma, const Options& opt, std::ostream& out);

/// CSV text for the sweep; throws UsageError for fewer than two gamma values.
std::string sweep_csv(const GameSpec& spec, const Options& opt);

int cmd_sweep(const GameSpec& spec, const std::string& out_path, const Options& opt,
              std::ostream& out, std::ostream& err);

int cmd_verify(const GameSpec& spec, double gamma, int grid_n, const Options& opt,
               const std::vector<StrategyProfile>& extra_profiles, std::ostream& out);

}  // namespace qgame::cli
