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

// Closed-form quantum Nash equilibria of symmetric 2x2 games.
//
// Payoffs depend on the local strategies only through (alpha1, beta1) and the
// phase sum phi = alpha2 + beta2, so every equilibrium is reported in those
// coordinates. Four solution families exist:
//
//   Type I    pure corners (k_alpha, k_beta) pi, phi arbitrary
//   Type II   cos alpha1 = cos beta1 = s (r + (-)^p)/(r - (-)^p), phi = p pi
//   Type III  a one-parameter arc, only for s = (-)^sigma and a33 < 0
//   Type IV   lines alpha1 + beta1 = pi (a33 < 0) or alpha1 = beta1 (a33 > 0),
//             only at maximal entanglement
//
// plus the degenerate classes where every profile is an equilibrium.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qgame/game_model.hpp"

namespace qgame {

struct StrategyProfile {
  double alpha1 = 0.0;
  double beta1 = 0.0;
  double phi = 0.0;
  // Individual phases, filled by resolve_phases.
  std::optional<double> resolved_alpha2;
  std::optional<double> resolved_beta2;

  StrategyProfile swapped() const { return {beta1, alpha1, phi, resolved_beta2, resolved_alpha2}; }
};

enum class SolutionKind { TypeI, TypeII, TypeIII, TypeIVSum, TypeIVDiffRejected };

std::string to_string(SolutionKind kind);

struct HessianEigenvalues {
  double plus = 0.0;
  double minus = 0.0;

  bool non_positive(double slack = tol::kConvexity) const { return plus <= slack && minus <= slack; }
};

/// A one-parameter family of equilibria in the (alpha1, beta1) plane at fixed phi.
struct ContinuumCurve {
  enum class Shape {
    // cos g ca cb + (-)^sigma (ca + cb) + cos g = 0, generic gamma
    TypeIIIArc,
    // the same equation at gamma in {0, pi}: two lines ca = -(-)^sigma cos g
    // and cb = -(-)^sigma cos g
    TypeIIISeparableLines,
    // alpha1 + beta1 = pi
    SumLine,
    // alpha1 = beta1
    DiffLine,
  };

  Shape shape = Shape::SumLine;
  int sigma = 0;
  double cos_gamma = 0.0;
  double phi = 0.0;

  /// Deterministic samples, uniform in cos(alpha1) over the admissible range.
  /// Requires n >= 2.
  std::vector<StrategyProfile> sample(int n) const;

  /// Max-norm distance in (alpha1, beta1) from a point to the curve.
  double distance(double alpha1, double beta1) const;
};

struct QNESolution {
  SolutionKind kind = SolutionKind::TypeI;
  int k_alpha = -1;  // Type I
  int k_beta = -1;   // Type I
  int p = -1;        // Type II, Type IV
  int sigma = -1;    // Type III
  double gamma = 0.0;

  // Isolated point, or the fair-minded representative of a continuum.
  StrategyProfile profile;
  bool phi_unconstrained = false;
  std::optional<ContinuumCurve> curve;

  double payoff_a = 0.0;
  double payoff_b = 0.0;
  HessianEigenvalues hessian_a;
  HessianEigenvalues hessian_b;
  bool convexity_ok = false;
  // Type IV difference branch: returned for inspection, not operational.
  bool rejected = false;

  bool is_continuum() const { return curve.has_value(); }
  /// "I(0,1)", "II(p=1)", "III(sigma=0)", "IV_sum", "IV_diff_rejected"
  std::string label() const;
};

enum class NoteKind {
  MaximalEntanglementDegeneracy,
  AllStrategiesDegenerate,
  NearA33Zero,
  NearA30Zero,
  NearSpecialS,
  NearMaximalGamma,
  NearSeparableGamma,
  Type2SingularAtMaximal,
};

struct QNENote {
  NoteKind kind;
  std::string message;
};

struct QNESet {
  double gamma = 0.0;
  std::vector<QNESolution> solutions;
  bool all_strategies = false;
  std::vector<QNENote> notes;

  bool has_note(NoteKind kind) const;
  /// Solutions usable for dilemma analysis (rejected Type IV removed unless asked).
  std::vector<QNESolution> operational(bool include_rejected = false) const;
  const QNESolution* find(const std::string& label) const;
};

/// Left-minus-right residuals of the three stationarity equations.
std::array<double, 3> stationarity_residual(const PayoffMatrix& a, const StrategyProfile& p,
                                            const EntanglementAngle& ent);

/// Eigenvalues of Alice's Hessian in (alpha1, alpha2) at the profile.
HessianEigenvalues hessian_eigenvalues(const PayoffMatrix& a, const StrategyProfile& p,
                                       const EntanglementAngle& ent);

/// Bob's Hessian in (beta1, beta2): Alice's formula with alpha and beta swapped.
HessianEigenvalues hessian_eigenvalues_bob(const PayoffMatrix& a, const StrategyProfile& p,
                                           const EntanglementAngle& ent);

/// The Type I corners passing their convexity conditions:
/// (0,0) H+ >= 0; (0,1), (1,0) H+ <= 0 and H- <= 0; (1,1) H- >= 0.
std::vector<QNESolution> type1_qne(const PayoffMatrix& a, const EntanglementAngle& ent);

struct Type2Outcome {
  enum class Status {
    Exists,
    OutOfRange,     // |cos alpha1*| > 1
    Singular,       // p = 0 at gamma = pi/2: absorbed into the Type IV difference line
    NotApplicable,  // a33 = 0
  };
  Status status = Status::NotApplicable;
  int p = -1;
  double cos_alpha1 = 0.0;  // meaningful unless Singular or NotApplicable
  std::optional<QNESolution> solution;
};

/// cos alpha1* for the Type II branch p in half-angle form (finite at gamma = pi).
/// Empty on the singular branch p = 0, gamma = pi/2.
std::optional<double> type2_cosine(double s, int p, const EntanglementAngle& ent);

/// Closed-form Type II payoff (1/a33)[(a00 a33 - a03 a30) + (-)^p (a33^2 - a03 a30) sin g].
double type2_payoff(const GameCoefficients& c, int p, const EntanglementAngle& ent);

/// p is chosen by sign(a33): p = 0 for a33 > 0, p = 1 for a33 < 0.
Type2Outcome type2_qne(const PayoffMatrix& a, const EntanglementAngle& ent);

/// The Type III arc when s = (-)^sigma and a33 < 0, else empty.
/// n_samples controls the density of the representative samples checked on
/// construction (>= 2).
std::optional<QNESolution> type3_curve(const PayoffMatrix& a, const EntanglementAngle& ent,
                                       int n_samples = 64);

/// Type IV solutions at gamma = pi/2: the sum line for a33 < 0, the rejected
/// difference line for a33 > 0, nothing for a33 = 0.
std::vector<QNESolution> type4_qne(const PayoffMatrix& a);

/// The complete equilibrium set at one (game, gamma) point.
QNESet enumerate_qne(const PayoffMatrix& a, const EntanglementAngle& ent);

/// Fair-minded phase split alpha2 = beta2 = phi/2. For the Type IV sum line the
/// representative alpha1 = beta1 = pi/2, alpha2 = beta2 = pi/2 is used.
StrategyProfile resolve_phases(const StrategyProfile& p, SolutionKind kind = SolutionKind::TypeI);

}  // namespace qgame
