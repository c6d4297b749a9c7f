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

#include "qgame/game_model.hpp"

#include <cmath>
#include <string>

namespace qgame {

PayoffMatrix::PayoffMatrix(double a00, double a01, double a10, double a11)
    : PayoffMatrix(std::array<double, 4>{a00, a01, a10, a11}) {}

PayoffMatrix::PayoffMatrix(const std::array<double, 4>& row_major) : a_(row_major) {
  for (double x : a_) {
    if (!std::isfinite(x)) throw ValidationError("payoff entries must be finite");
  }
}

GameCoefficients coefficients(const PayoffMatrix& a) {
  const double A00 = a(0, 0), A01 = a(0, 1), A10 = a(1, 0), A11 = a(1, 1);
  GameCoefficients c;
  c.a00 = (A00 + A01 + A10 + A11) / 4;
  c.a03 = (A00 - A01 + A10 - A11) / 4;
  c.a30 = (A00 + A01 - A10 - A11) / 4;
  c.a33 = (A00 - A01 - A10 + A11) / 4;
  if (!c.a33_zero()) {
    c.s = c.a30 / c.a33;
    c.t = c.a03 / c.a33;
    if (!near_zero(*c.s + 1.0)) c.u = (*c.s - 1.0) / (*c.s + 1.0);
    if (!near_zero(*c.t + 1.0)) c.v = (*c.t - 1.0) / (*c.t + 1.0);
  }
  return c;
}

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Chicken: return "Chicken";
    case FamilyTag::SymmetricBoS: return "SymmetricBoS";
    case FamilyTag::PD_PositiveA33: return "PD_PositiveA33";
    case FamilyTag::PD_NegativeA33: return "PD_NegativeA33";
    case FamilyTag::StagHunt: return "StagHunt";
    case FamilyTag::SpecialTypeIII: return "SpecialTypeIII";
    case FamilyTag::Degenerate_bothZero: return "Degenerate_bothZero";
    case FamilyTag::Degenerate_a33Zero: return "Degenerate_a33Zero";
    case FamilyTag::Degenerate_a30Zero: return "Degenerate_a30Zero";
    case FamilyTag::Other: return "Other";
  }
  return "Other";
}

std::string to_string(const GameFamily& family) {
  if (family.tag == FamilyTag::SpecialTypeIII) {
    return "SpecialTypeIII(sigma=" + std::to_string(family.sigma) + ")";
  }
  return to_string(family.tag);
}

GameFamily classify_family(const PayoffMatrix& a) {
  const auto c = coefficients(a);
  if (c.a33_zero() && c.a30_zero()) return {FamilyTag::Degenerate_bothZero};
  if (c.a33_zero()) return {FamilyTag::Degenerate_a33Zero};
  if (c.a33 < 0.0) {
    for (int sigma = 0; sigma < 2; ++sigma) {
      if (near_zero(*c.s - (sigma == 0 ? 1.0 : -1.0))) return {FamilyTag::SpecialTypeIII, sigma};
    }
  }

  const double A00 = a(0, 0), A01 = a(0, 1), A10 = a(1, 0), A11 = a(1, 1);
  int matches = 0;
  GameFamily found{FamilyTag::Other};
  auto match = [&](bool cond, FamilyTag tag) {
    if (cond) {
      ++matches;
      found = {tag};
    }
  };
  match(A10 > A00 && A00 > A01 && A01 > A11, FamilyTag::Chicken);
  match(A10 > A01 && A01 > A11 && near_zero(A11 - A00), FamilyTag::SymmetricBoS);
  const bool pd = A10 > A00 && A00 > A11 && A11 > A01 && 2 * A00 > A01 + A10 && A01 + A10 > 2 * A11;
  match(pd && c.a33 > 0.0, FamilyTag::PD_PositiveA33);
  match(pd && c.a33 < 0.0, FamilyTag::PD_NegativeA33);
  match(A00 > A10 && A10 >= A11 && A11 > A01 && A10 + A11 > A00 + A01, FamilyTag::StagHunt);
  if (matches == 1) return found;
  // Ambiguous or no match. Ambiguity is impossible for the strict sets but we
  // never guess.
  if (matches == 0 && c.a30_zero()) return {FamilyTag::Degenerate_a30Zero};
  return {FamilyTag::Other};
}

double payoff_fast(const GameCoefficients& c, double cos_a1, double sin_a1, double cos_b1,
                   double sin_b1, double cos_phi, double cos_gamma, double sin_gamma) {
  return c.a00 + c.a33 * cos_a1 * cos_b1 + cos_gamma * (c.a30 * cos_a1 + c.a03 * cos_b1) +
         c.a33 * sin_gamma * cos_phi * sin_a1 * sin_b1;
}

PayoffSplit closed_form_payoff(const PayoffMatrix& a, double alpha1, double beta1, double phi,
                               const EntanglementAngle& ent) {
  if (!(alpha1 >= -1e-12 && alpha1 <= kPi + 1e-12) || !(beta1 >= -1e-12 && beta1 <= kPi + 1e-12)) {
    throw RangeError("alpha1 and beta1 must lie in [0, pi]");
  }
  const auto c = coefficients(a);
  const double ca = std::cos(alpha1), cb = std::cos(beta1);
  PayoffSplit out;
  out.pseudo_classical = c.a00 + c.a33 * ca * cb + ent.cos_gamma() * (c.a30 * ca + c.a03 * cb);
  out.interference =
      c.a33 * ent.sin_gamma() * std::cos(phi) * std::sin(alpha1) * std::sin(beta1);
  out.total = out.pseudo_classical + out.interference;
  return out;
}

PayoffSplit closed_form_payoff_bob(const PayoffMatrix& a, double alpha1, double beta1, double phi,
                                   const EntanglementAngle& ent) {
  return closed_form_payoff(a, beta1, alpha1, phi, ent);
}

std::pair<double, double> classical_payoff(const PayoffMatrix& a, double x, double y) {
  auto in_unit = [](double p) { return p >= -tol::kValidation && p <= 1.0 + tol::kValidation; };
  if (!in_unit(x) || !in_unit(y)) throw RangeError("probabilities must lie in [0, 1]");
  const std::array<double, 2> xa{x, 1.0 - x};
  const std::array<double, 2> yb{y, 1.0 - y};
  double pa = 0.0, pb = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      pa += xa[i] * a(i, j) * yb[j];
      pb += xa[i] * a(j, i) * yb[j];
    }
  }
  return {pa, pb};
}

}  // namespace qgame
