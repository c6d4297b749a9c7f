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

// Symmetric 2x2 games: payoff tables, coefficient shorthand, family
// classification and the closed-form quantum payoff.

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "qgame/quantum_core.hpp"

namespace qgame {

/// Alice's payoff table A_ij (i = Alice's basis strategy, j = Bob's).
/// Bob's table is the transpose, B_ij = A_ji.
class PayoffMatrix {
 public:
  PayoffMatrix(double a00, double a01, double a10, double a11);
  explicit PayoffMatrix(const std::array<double, 4>& row_major);

  double operator()(int i, int j) const { return a_[2 * i + j]; }
  const std::array<double, 4>& entries() const { return a_; }

  /// Diagonal of Alice's payoff operator in basis order |0,0>..|1,1>.
  std::array<double, 4> alice_diag() const { return a_; }
  /// Diagonal of Bob's payoff operator, B_ij = A_ji.
  std::array<double, 4> bob_diag() const { return {a_[0], a_[2], a_[1], a_[3]}; }

  /// A with both players' strategy labels flipped: A'_ij = A_{1-i,1-j}.
  PayoffMatrix converted() const { return {a_[3], a_[2], a_[1], a_[0]}; }

  bool operator==(const PayoffMatrix&) const = default;

 private:
  std::array<double, 4> a_;
};

struct GameCoefficients {
  double a00 = 0.0;
  double a03 = 0.0;
  double a30 = 0.0;
  double a33 = 0.0;
  std::optional<double> s;  // a30/a33
  std::optional<double> t;  // a03/a33
  std::optional<double> u;  // (s-1)/(s+1)
  std::optional<double> v;  // (t-1)/(t+1)

  bool a33_zero() const { return near_zero(a33); }
  bool a30_zero() const { return near_zero(a30); }
};

GameCoefficients coefficients(const PayoffMatrix& a);

enum class FamilyTag {
  Chicken,
  SymmetricBoS,
  PD_PositiveA33,
  PD_NegativeA33,
  StagHunt,
  SpecialTypeIII,
  Degenerate_bothZero,
  Degenerate_a33Zero,
  Degenerate_a30Zero,
  Other,
};

struct GameFamily {
  FamilyTag tag = FamilyTag::Other;
  int sigma = -1;  // SpecialTypeIII only: s = (-1)^sigma

  bool operator==(const GameFamily&) const = default;
};

std::string to_string(FamilyTag tag);
std::string to_string(const GameFamily& family);

/// Precedence: Degenerate_bothZero, Degenerate_a33Zero, SpecialTypeIII, the
/// named families, Degenerate_a30Zero, Other. Named-family inequalities are
/// evaluated strictly except the Stag Hunt's A10 >= A11 and the BoS equality.
GameFamily classify_family(const PayoffMatrix& a);

struct PayoffSplit {
  double pseudo_classical = 0.0;
  double interference = 0.0;
  double total = 0.0;
};

/// Alice's payoff: a00 + a33 cos a1 cos b1 + cos g (a30 cos a1 + a03 cos b1)
///                 + a33 sin g cos phi sin a1 sin b1.
PayoffSplit closed_form_payoff(const PayoffMatrix& a, double alpha1, double beta1, double phi,
                               const EntanglementAngle& ent);

/// Bob's payoff of a symmetric game: Alice's with alpha1 and beta1 swapped.
PayoffSplit closed_form_payoff_bob(const PayoffMatrix& a, double alpha1, double beta1, double phi,
                                   const EntanglementAngle& ent);

/// Same as closed_form_payoff(...).total from precomputed coefficients; no
/// range checks. Used in inner loops.
double payoff_fast(const GameCoefficients& c, double cos_a1, double sin_a1, double cos_b1,
                   double sin_b1, double cos_phi, double cos_gamma, double sin_gamma);

/// Classical mixed-strategy payoffs (piA, piB); x and y are the probabilities
/// that Alice and Bob play strategy 0.
std::pair<double, double> classical_payoff(const PayoffMatrix& a, double x, double y);

/// The classical embedding x = cos^2(theta1/2).
inline double probability_from_angle(double theta1) {
  const double c = std::cos(theta1 / 2);
  return c * c;
}

}  // namespace qgame
