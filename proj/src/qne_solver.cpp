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

#include "qgame/qne_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qgame {

namespace {

constexpr int kCurveDistanceSamples = 4097;

double clamp_cos(double c) { return std::clamp(c, -1.0, 1.0); }

bool in_band(double x) { return std::abs(x) <= tol::kWarningBand && !near_zero(x); }

void fill_metrics(const PayoffMatrix& a, const EntanglementAngle& ent, QNESolution& sol) {
  const auto& p = sol.profile;
  sol.payoff_a = closed_form_payoff(a, p.alpha1, p.beta1, p.phi, ent).total;
  sol.payoff_b = closed_form_payoff_bob(a, p.alpha1, p.beta1, p.phi, ent).total;
  sol.hessian_a = hessian_eigenvalues(a, p, ent);
  sol.hessian_b = hessian_eigenvalues_bob(a, p, ent);
  sol.convexity_ok = sol.hessian_a.non_positive() && sol.hessian_b.non_positive();
}

}  // namespace

std::string to_string(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::TypeI: return "TypeI";
    case SolutionKind::TypeII: return "TypeII";
    case SolutionKind::TypeIII: return "TypeIII";
    case SolutionKind::TypeIVSum: return "TypeIV_sum";
    case SolutionKind::TypeIVDiffRejected: return "TypeIV_diff_rejected";
  }
  return "?";
}

std::string QNESolution::label() const {
  switch (kind) {
    case SolutionKind::TypeI:
      return "I(" + std::to_string(k_alpha) + "," + std::to_string(k_beta) + ")";
    case SolutionKind::TypeII: return "II(p=" + std::to_string(p) + ")";
    case SolutionKind::TypeIII: return "III(sigma=" + std::to_string(sigma) + ")";
    case SolutionKind::TypeIVSum: return "IV_sum";
    case SolutionKind::TypeIVDiffRejected: return "IV_diff_rejected";
  }
  return "?";
}

bool QNESet::has_note(NoteKind kind) const {
  return std::any_of(notes.begin(), notes.end(), [&](const QNENote& n) { return n.kind == kind; });
}

std::vector<QNESolution> QNESet::operational(bool include_rejected) const {
  std::vector<QNESolution> out;
  for (const auto& s : solutions) {
    if (!s.rejected || include_rejected) out.push_back(s);
  }
  return out;
}

const QNESolution* QNESet::find(const std::string& label) const {
  for (const auto& s : solutions) {
    if (s.label() == label) return &s;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Curves

std::vector<StrategyProfile> ContinuumCurve::sample(int n) const {
  if (n < 2) throw UsageError("curve sampling needs at least 2 points");
  std::vector<StrategyProfile> out;
  out.reserve(static_cast<std::size_t>(n));
  const double eps = sigma == 0 ? 1.0 : -1.0;
  auto uniform = [n](int k) { return -1.0 + 2.0 * k / (n - 1); };

  switch (shape) {
    case Shape::TypeIIIArc:
      for (int k = 0; k < n; ++k) {
        const double ca = uniform(k);
        const double cb = clamp_cos(-(cos_gamma + eps * ca) / (cos_gamma * ca + eps));
        out.push_back({std::acos(ca), std::acos(cb), phi, {}, {}});
      }
      break;
    case Shape::TypeIIISeparableLines: {
      const double fixed = std::acos(clamp_cos(-eps * cos_gamma));
      const int first = (n + 1) / 2;
      for (int k = 0; k < first; ++k) {
        const double c = first > 1 ? -1.0 + 2.0 * k / (first - 1) : 0.0;
        out.push_back({fixed, std::acos(c), phi, {}, {}});
      }
      const int second = n - first;
      for (int k = 0; k < second; ++k) {
        const double c = second > 1 ? -1.0 + 2.0 * k / (second - 1) : 0.0;
        out.push_back({std::acos(c), fixed, phi, {}, {}});
      }
      break;
    }
    case Shape::SumLine:
      for (int k = 0; k < n; ++k) {
        const double a1 = std::acos(uniform(k));
        out.push_back({a1, kPi - a1, phi, {}, {}});
      }
      break;
    case Shape::DiffLine:
      for (int k = 0; k < n; ++k) {
        const double a1 = std::acos(uniform(k));
        out.push_back({a1, a1, phi, {}, {}});
      }
      break;
  }
  return out;
}

double ContinuumCurve::distance(double alpha1, double beta1) const {
  switch (shape) {
    case Shape::SumLine: return std::abs(alpha1 + beta1 - kPi) / 2;
    case Shape::DiffLine: return std::abs(alpha1 - beta1) / 2;
    case Shape::TypeIIISeparableLines: {
      const double eps = sigma == 0 ? 1.0 : -1.0;
      const double fixed = std::acos(clamp_cos(-eps * cos_gamma));
      return std::min(std::abs(alpha1 - fixed), std::abs(beta1 - fixed));
    }
    case Shape::TypeIIIArc: break;
  }
  // The arc is symmetric under alpha1 <-> beta1, so sampling uniformly in
  // alpha1 and measuring both (a, b) and (b, a) covers its steep parts.
  const double eps = sigma == 0 ? 1.0 : -1.0;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kCurveDistanceSamples; ++k) {
    const double x = kPi * k / (kCurveDistanceSamples - 1);
    const double ca = std::cos(x);
    const double y = std::acos(clamp_cos(-(cos_gamma + eps * ca) / (cos_gamma * ca + eps)));
    best = std::min(best, std::max(std::abs(alpha1 - x), std::abs(beta1 - y)));
    best = std::min(best, std::max(std::abs(beta1 - x), std::abs(alpha1 - y)));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Local conditions

std::array<double, 3> stationarity_residual(const PayoffMatrix& a, const StrategyProfile& p,
                                            const EntanglementAngle& ent) {
  const auto c = coefficients(a);
  const double ca = std::cos(p.alpha1), sa = std::sin(p.alpha1);
  const double cb = std::cos(p.beta1), sb = std::sin(p.beta1);
  const double cg = ent.cos_gamma(), sg = ent.sin_gamma();
  const double cphi = std::cos(p.phi), sphi = std::sin(p.phi);
  return {
      sa * (c.a33 * cb + c.a30 * cg) - c.a33 * sg * cphi * ca * sb,
      sb * (c.a33 * ca + c.a30 * cg) - c.a33 * sg * cphi * cb * sa,
      c.a33 * sg * sphi * sa * sb,
  };
}

HessianEigenvalues hessian_eigenvalues(const PayoffMatrix& a, const StrategyProfile& p,
                                       const EntanglementAngle& ent) {
  const auto c = coefficients(a);
  const double ca = std::cos(p.alpha1), sa = std::sin(p.alpha1);
  const double cb = std::cos(p.beta1), sb = std::sin(p.beta1);
  const double k = c.a33 * cb + c.a30 * ent.cos_gamma();
  const double l = c.a33 * ent.sin_gamma() * sb;
  const double base = -ca * k - 2.0 * l * std::cos(p.phi) * sa;
  const double root = std::abs(ca) * std::hypot(k, 2.0 * l * std::sin(p.phi));
  return {(base + root) / 2, (base - root) / 2};
}

HessianEigenvalues hessian_eigenvalues_bob(const PayoffMatrix& a, const StrategyProfile& p,
                                           const EntanglementAngle& ent) {
  return hessian_eigenvalues(a, p.swapped(), ent);
}

// ---------------------------------------------------------------------------
// Type I

std::vector<QNESolution> type1_qne(const PayoffMatrix& a, const EntanglementAngle& ent) {
  const auto c = coefficients(a);
  const double h_plus = c.a33 + c.a30 * ent.cos_gamma();
  const double h_minus = c.a33 - c.a30 * ent.cos_gamma();
  const double slack = tol::kConvexity;
  const bool admitted[2][2] = {
      {h_plus >= -slack, h_plus <= slack && h_minus <= slack},
      {h_plus <= slack && h_minus <= slack, h_minus >= -slack},
  };

  std::vector<QNESolution> out;
  for (int ka = 0; ka < 2; ++ka) {
    for (int kb = 0; kb < 2; ++kb) {
      if (!admitted[ka][kb]) continue;
      QNESolution sol;
      sol.kind = SolutionKind::TypeI;
      sol.k_alpha = ka;
      sol.k_beta = kb;
      sol.gamma = ent.gamma();
      sol.profile = {ka * kPi, kb * kPi, 0.0, {}, {}};
      sol.phi_unconstrained = true;
      fill_metrics(a, ent, sol);
      out.push_back(sol);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Type II

std::optional<double> type2_cosine(double s, int p, const EntanglementAngle& ent) {
  // s (r + e)/(r - e) with r = tan(gamma/2), multiplied through by cos(gamma/2).
  const double e = p == 0 ? 1.0 : -1.0;
  const double num = ent.sin_half() + e * ent.cos_half();
  const double den = ent.sin_half() - e * ent.cos_half();
  if (p == 0 && ent.is_maximal()) return std::nullopt;
  return s * num / den;
}

double type2_payoff(const GameCoefficients& c, int p, const EntanglementAngle& ent) {
  const double e = p == 0 ? 1.0 : -1.0;
  return ((c.a00 * c.a33 - c.a03 * c.a30) + e * (c.a33 * c.a33 - c.a03 * c.a30) * ent.sin_gamma()) /
         c.a33;
}

Type2Outcome type2_qne(const PayoffMatrix& a, const EntanglementAngle& ent) {
  Type2Outcome out;
  const auto c = coefficients(a);
  if (c.a33_zero()) return out;
  out.p = c.a33 > 0.0 ? 0 : 1;
  const auto cosine = type2_cosine(*c.s, out.p, ent);
  if (!cosine) {
    out.status = Type2Outcome::Status::Singular;
    return out;
  }
  out.cos_alpha1 = *cosine;
  if (std::abs(*cosine) > 1.0 + tol::kAlgebraic) {
    out.status = Type2Outcome::Status::OutOfRange;
    return out;
  }
  out.status = Type2Outcome::Status::Exists;

  QNESolution sol;
  sol.kind = SolutionKind::TypeII;
  sol.p = out.p;
  sol.gamma = ent.gamma();
  const double angle = std::acos(clamp_cos(*cosine));
  sol.profile = {angle, angle, out.p * kPi, {}, {}};
  // Without entanglement the interference term vanishes and phi is free.
  sol.phi_unconstrained = ent.is_separable();
  fill_metrics(a, ent, sol);
  out.solution = sol;
  return out;
}

// ---------------------------------------------------------------------------
// Type III

std::optional<QNESolution> type3_curve(const PayoffMatrix& a, const EntanglementAngle& ent,
                                       int n_samples) {
  if (n_samples < 2) throw UsageError("n_samples must be >= 2");
  const auto c = coefficients(a);
  if (c.a33_zero() || !(c.a33 < 0.0)) return std::nullopt;
  int sigma = -1;
  if (near_zero(*c.s - 1.0)) sigma = 0;
  else if (near_zero(*c.s + 1.0)) sigma = 1;
  if (sigma < 0) return std::nullopt;

  const double eps = sigma == 0 ? 1.0 : -1.0;
  const double cg = ent.cos_gamma();
  ContinuumCurve curve;
  curve.shape = ent.is_separable() ? ContinuumCurve::Shape::TypeIIISeparableLines
                                   : ContinuumCurve::Shape::TypeIIIArc;
  curve.sigma = sigma;
  curve.cos_gamma = cg;
  curve.phi = kPi;

  QNESolution sol;
  sol.kind = SolutionKind::TypeIII;
  sol.sigma = sigma;
  sol.gamma = ent.gamma();
  // Symmetric point of cos g x^2 + 2 e x + cos g = 0: x = -e cos g/(1 + sin g).
  const double sym = clamp_cos(-eps * cg / (1.0 + ent.sin_gamma()));
  sol.profile = {std::acos(sym), std::acos(sym), kPi, {}, {}};
  sol.phi_unconstrained = ent.is_separable();
  sol.curve = curve;
  fill_metrics(a, ent, sol);
  // Flat directions along the curve make the weaker of the two eigenvalues
  // vanish; convexity_ok is evaluated on every sample.
  for (const auto& p : curve.sample(n_samples)) {
    if (!hessian_eigenvalues(a, p, ent).non_positive() ||
        !hessian_eigenvalues_bob(a, p, ent).non_positive()) {
      sol.convexity_ok = false;
    }
  }
  return sol;
}

// ---------------------------------------------------------------------------
// Type IV

std::vector<QNESolution> type4_qne(const PayoffMatrix& a) {
  const auto c = coefficients(a);
  if (c.a33_zero()) return {};
  const EntanglementAngle ent(kPi / 2);
  QNESolution sol;
  sol.gamma = ent.gamma();
  ContinuumCurve curve;
  curve.cos_gamma = 0.0;
  if (c.a33 < 0.0) {
    sol.kind = SolutionKind::TypeIVSum;
    sol.p = 1;
    curve.shape = ContinuumCurve::Shape::SumLine;
    curve.phi = kPi;
    sol.profile = resolve_phases({kPi / 2, kPi / 2, kPi, {}, {}}, SolutionKind::TypeIVSum);
  } else {
    sol.kind = SolutionKind::TypeIVDiffRejected;
    sol.p = 0;
    sol.rejected = true;
    curve.shape = ContinuumCurve::Shape::DiffLine;
    curve.phi = 0.0;
    sol.profile = resolve_phases({kPi / 2, kPi / 2, 0.0, {}, {}});
  }
  sol.curve = curve;
  fill_metrics(a, ent, sol);
  return {sol};
}

// ---------------------------------------------------------------------------

StrategyProfile resolve_phases(const StrategyProfile& p, SolutionKind kind) {
  StrategyProfile out = p;
  if (kind == SolutionKind::TypeIVSum) {
    out.alpha1 = kPi / 2;
    out.beta1 = kPi / 2;
  }
  out.resolved_alpha2 = p.phi / 2;
  out.resolved_beta2 = p.phi / 2;
  return out;
}

QNESet enumerate_qne(const PayoffMatrix& a, const EntanglementAngle& ent) {
  const auto c = coefficients(a);
  QNESet set;
  set.gamma = ent.gamma();

  auto note = [&](NoteKind kind, std::string msg) { set.notes.push_back({kind, std::move(msg)}); };
  if (in_band(c.a33)) note(NoteKind::NearA33Zero, "a33 is within the warning band of 0");
  if (in_band(c.a30)) note(NoteKind::NearA30Zero, "a30 is within the warning band of 0");
  if (c.s && (in_band(*c.s - 1.0) || in_band(*c.s + 1.0))) {
    note(NoteKind::NearSpecialS, "s is within the warning band of +-1");
  }
  if (in_band(ent.gamma() - kPi / 2)) {
    note(NoteKind::NearMaximalGamma, "gamma is within the warning band of pi/2");
  }
  if (in_band(ent.gamma()) || in_band(kPi - ent.gamma())) {
    note(NoteKind::NearSeparableGamma, "gamma is within the warning band of 0 or pi");
  }

  if (c.a33_zero()) {
    const double drive = c.a30 * ent.cos_gamma();
    if (c.a30_zero() || ent.is_maximal() || near_zero(drive)) {
      set.all_strategies = true;
      note(NoteKind::AllStrategiesDegenerate,
           c.a30_zero() ? "a33 = a30 = 0: every profile is a QNE"
                        : "a33 = 0 and cos(gamma) = 0: every profile is a QNE");
      return set;
    }
    // Alice's payoff reduces to a00 + cos g (a30 cos a1 + a03 cos b1).
    QNESolution sol;
    sol.kind = SolutionKind::TypeI;
    sol.k_alpha = sol.k_beta = drive > 0.0 ? 0 : 1;
    sol.gamma = ent.gamma();
    sol.profile = {sol.k_alpha * kPi, sol.k_beta * kPi, 0.0, {}, {}};
    sol.phi_unconstrained = true;
    fill_metrics(a, ent, sol);
    set.solutions.push_back(sol);
    return set;
  }

  for (auto& s : type1_qne(a, ent)) set.solutions.push_back(std::move(s));
  const auto t2 = type2_qne(a, ent);
  if (t2.solution) set.solutions.push_back(*t2.solution);
  if (t2.status == Type2Outcome::Status::Singular) {
    note(NoteKind::Type2SingularAtMaximal,
         "the p=0 mixed branch is singular at gamma = pi/2 and merges into the alpha1 = beta1 line");
  }
  if (auto t3 = type3_curve(a, ent)) set.solutions.push_back(std::move(*t3));
  if (ent.is_maximal()) {
    for (auto& s : type4_qne(a)) set.solutions.push_back(std::move(s));
    note(NoteKind::MaximalEntanglementDegeneracy,
         "maximal entanglement: payoffs of distinct solutions may coincide");
  }
  return set;
}

}  // namespace qgame
