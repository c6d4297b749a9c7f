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

// Game definition files.
//
//   # comment
//   name   = Chicken
//   matrix = [3, 1, 4, 0]            # A00, A01, A10, A11
//   gamma  = pi/3                    # or a list: [0, pi/4, pi/2]
//   gamma_linspace = [0, pi, 5]      # start, stop, count (instead of gamma)
//
// Angles are radians, written as decimals or pi-fractions such as pi, pi/3,
// 2*pi/3, 0.5*pi.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qgame/game_model.hpp"

namespace qgame {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& field, const std::string& msg);

  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

struct GameSpec {
  std::string name;
  PayoffMatrix matrix{0.0, 0.0, 0.0, 0.0};
  std::vector<double> gammas;  // empty when the file gives none
};

/// A decimal number or pi-fraction. Throws std::invalid_argument.
double parse_angle(std::string_view text);

GameSpec parse_game_spec(std::string_view text, const std::string& source = "<input>");

/// Throws ParseError (line 0) when the file cannot be read.
GameSpec load_game_spec(const std::string& path);

/// %.12g with -0 printed as 0; "inf" for +infinity.
std::string format_number(double x);

/// x rounded to 12 significant digits, -0 mapped to 0.
double round12(double x);

}  // namespace qgame
