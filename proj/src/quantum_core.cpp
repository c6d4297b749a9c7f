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

#include "qgame/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qgame {

namespace {

constexpr double kAngleSlack = 1e-12;
constexpr cplx kI{0.0, 1.0};

void check_range(double value, double lo, double hi, bool hi_inclusive, const char* name) {
  const bool ok = std::isfinite(value) && value >= lo - kAngleSlack &&
                  (hi_inclusive ? value <= hi + kAngleSlack : value < hi);
  if (!ok) {
    throw RangeError(std::string(name) + "=" + std::to_string(value) + " outside [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + (hi_inclusive ? "]" : ")"));
  }
}

// e^{i theta sigma3/2}
LocalUnitary z_rotation(double theta) {
  return {std::exp(kI * (theta / 2)), 0.0, 0.0, std::exp(-kI * (theta / 2))};
}

// e^{i theta sigma2/2} = cos(theta/2) 1 + sin(theta/2) i sigma2, and i sigma2 = ((0,1),(-1,0)).
LocalUnitary y_rotation(double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return {c, s, -s, c};
}

}  // namespace

void EulerAngles::validate() const {
  check_range(theta1, 0.0, kPi, true, "theta1");
  check_range(theta2, 0.0, kTwoPi, false, "theta2");
  check_range(theta3, 0.0, kTwoPi, false, "theta3");
}

LocalUnitary LocalUnitary::adjoint() const {
  return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
}

LocalUnitary LocalUnitary::conjugate() const {
  return {std::conj(m_[0]), std::conj(m_[1]), std::conj(m_[2]), std::conj(m_[3])};
}

cplx LocalUnitary::determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

LocalUnitary operator*(const LocalUnitary& a, const LocalUnitary& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

double LocalUnitary::unitarity_defect() const {
  const LocalUnitary p = adjoint() * (*this);
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      worst = std::max(worst, std::abs(p(i, j) - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double JointState::norm_squared() const {
  double n = 0.0;
  for (const auto& a : amp_) n += std::norm(a);
  return n;
}

std::array<double, 4> JointState::probabilities() const {
  return {std::norm(amp_[0]), std::norm(amp_[1]), std::norm(amp_[2]), std::norm(amp_[3])};
}

cplx JointState::inner(const JointState& other) const {
  cplx acc = 0.0;
  for (std::size_t i = 0; i < 4; ++i) acc += std::conj(amp_[i]) * other.amp_[i];
  return acc;
}

EntanglementAngle::EntanglementAngle(double gamma) {
  check_range(gamma, 0.0, kPi, true, "gamma");
  gamma_ = std::clamp(gamma, 0.0, kPi);
  is_pi_ = near_zero(kPi - gamma_);
  if (gamma_ == 0.0) {
    cos_ = 1.0;
    sin_ = 0.0;
    cos_half_ = 1.0;
    sin_half_ = 0.0;
  } else if (gamma_ == kPi) {
    cos_ = -1.0;
    sin_ = 0.0;
    cos_half_ = 0.0;
    sin_half_ = 1.0;
  } else {
    cos_ = std::cos(gamma_);
    sin_ = std::sin(gamma_);
    cos_half_ = std::cos(gamma_ / 2);
    sin_half_ = std::sin(gamma_ / 2);
  }
}

EntanglementAngle EntanglementAngle::from_r(double r) {
  if (!(r >= 0.0)) throw RangeError("r must be non-negative, got " + std::to_string(r));
  if (std::isinf(r)) return EntanglementAngle(kPi);
  return EntanglementAngle(2.0 * std::atan(r));
}

std::optional<double> EntanglementAngle::r() const {
  if (is_pi_) return std::nullopt;
  return sin_half_ / cos_half_;
}

bool EntanglementAngle::is_separable() const { return near_zero(gamma_) || is_pi_; }

bool EntanglementAngle::is_maximal() const { return near_zero(gamma_ - kPi / 2); }

LocalUnitary euler_unitary(const EulerAngles& angles) {
  angles.validate();
  return z_rotation(angles.theta3) * y_rotation(angles.theta1) * z_rotation(angles.theta2);
}

JointState build_joint_state(const EulerAngles& alpha, const EulerAngles& beta,
                             const EntanglementAngle& ent) {
  const LocalUnitary ua = euler_unitary(alpha);
  const LocalUnitary ub = euler_unitary(beta);
  const double c = ent.cos_half();
  const double s = ent.sin_half();
  std::array<cplx, 4> amp{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      amp[2 * i + j] = c * ua(i, 0) * ub(j, 0) + s * ua(i, 1) * ub(j, 1);
    }
  }
  return JointState(amp);
}

JointState build_joint_state_compact(const EulerAngles& alpha_v, const EulerAngles& beta_v,
                                     double phi, const EntanglementAngle& ent) {
  EulerAngles a = alpha_v;
  EulerAngles b = beta_v;
  a.theta2 = 0.0;
  b.theta2 = 0.0;
  a.validate();
  b.validate();
  check_range(phi, 0.0, kTwoPi, false, "phi");

  // e^{i gamma D2/2}|0,0> = cos(gamma/2)|0,0> - i sin(gamma/2)|1,1>
  cplx c00 = ent.cos_half();
  cplx c11 = -kI * ent.sin_half();
  // X is diag(1, 0, 0, -1) in the product basis.
  const double theta = phi - kPi / 2;
  c00 *= std::exp(kI * (theta / 2));
  c11 *= std::exp(-kI * (theta / 2));

  const LocalUnitary va = z_rotation(a.theta3) * y_rotation(a.theta1);
  const LocalUnitary vb = z_rotation(b.theta3) * y_rotation(b.theta1);
  std::array<cplx, 4> amp{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      amp[2 * i + j] = va(i, 0) * vb(j, 0) * c00 + va(i, 1) * vb(j, 1) * c11;
    }
  }
  return JointState(amp);
}

Expansion expansion_amplitudes(double alpha1, double beta1, double xi_plus, double xi_minus,
                               double phi, const EntanglementAngle& ent) {
  check_range(alpha1, 0.0, kPi, true, "alpha1");
  check_range(beta1, 0.0, kPi, true, "beta1");
  const double chi_plus = (alpha1 + beta1) / 2;
  const double chi_minus = (alpha1 - beta1) / 2;
  const cplx rot = std::exp(-kI * phi) * ent.sin_half();
  const cplx gp = ent.cos_half() + rot;
  const cplx gm = ent.cos_half() - rot;

  const cplx a00 = std::exp(kI * xi_plus) * (gm * std::cos(chi_plus) + gp * std::cos(chi_minus));
  const cplx a11 = -std::exp(-kI * xi_plus) * (gm * std::cos(chi_plus) - gp * std::cos(chi_minus));
  const cplx a01 = -std::exp(kI * xi_minus) * (gm * std::sin(chi_plus) - gp * std::sin(chi_minus));
  const cplx a10 = -std::exp(-kI * xi_minus) * (gm * std::sin(chi_plus) + gp * std::sin(chi_minus));

  Expansion out;
  out.state = JointState(0.5 * a00, 0.5 * a01, 0.5 * a10, 0.5 * a11);
  out.gamma_plus = gp;
  out.gamma_minus = gm;
  out.degenerate_representation =
      std::abs(gp) <= tol::kCondition || std::abs(gm) <= tol::kCondition;
  return out;
}

double expectation_payoff(const JointState& state, std::span<const double, 4> diag) {
  const double n = state.norm_squared();
  if (!(std::abs(n - 1.0) <= tol::kValidation)) {
    throw ValidationError("state is not normalized: |psi|^2 = " + std::to_string(n));
  }
  const auto p = state.probabilities();
  return p[0] * diag[0] + p[1] * diag[1] + p[2] * diag[2] + p[3] * diag[3];
}

bool states_equal_up_to_phase(const JointState& s1, const JointState& s2, double tol) {
  return std::abs(s1.inner(s2)) >= 1.0 - tol;
}

JointState product_state(const std::array<cplx, 2>& a, const std::array<cplx, 2>& b) {
  return JointState(a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]);
}

std::array<cplx, 2> local_state(const EulerAngles& angles) {
  const LocalUnitary v = z_rotation(angles.theta3) * y_rotation(angles.theta1);
  return {v(0, 0), v(1, 0)};
}

}  // namespace qgame
