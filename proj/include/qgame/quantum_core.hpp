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

// Two-qubit joint strategies in Schmidt form.
//
// A joint strategy is U_A(alpha) (x) U_B(beta) applied to the Schmidt state
// cos(gamma/2)|0,0> + sin(gamma/2)|1,1>, where each local unitary is the
// Euler product e^{i t3 sigma3/2} e^{i t1 sigma2/2} e^{i t2 sigma3/2}.
//
// Conventions:
//   sigma2 = ((0,-i),(i,0)), sigma3 = diag(1,-1)
//   basis order |0,0>, |0,1>, |1,0>, |1,1> with Alice's qubit first
//   states are rays: compare them with states_equal_up_to_phase only.

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>

#include "qgame/common.hpp"

namespace qgame {

using cplx = std::complex<double>;

/// One player's Euler angles: theta1 in [0, pi], theta2 and theta3 in [0, 2pi).
struct EulerAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;

  /// Throws RangeError when an angle is outside its range.
  void validate() const;
};

/// 2x2 complex matrix, row-major.
class LocalUnitary {
 public:
  LocalUnitary() = default;
  LocalUnitary(cplx m00, cplx m01, cplx m10, cplx m11) : m_{m00, m01, m10, m11} {}

  static LocalUnitary identity() { return {1.0, 0.0, 0.0, 1.0}; }

  cplx operator()(int row, int col) const { return m_[2 * row + col]; }

  LocalUnitary adjoint() const;
  LocalUnitary conjugate() const;
  cplx determinant() const;
  friend LocalUnitary operator*(const LocalUnitary& a, const LocalUnitary& b);

  /// max |(U^dagger U - I)_ij|
  double unitarity_defect() const;

 private:
  std::array<cplx, 4> m_{};
};

/// Amplitudes on |0,0>, |0,1>, |1,0>, |1,1>.
class JointState {
 public:
  JointState() = default;
  explicit JointState(const std::array<cplx, 4>& amplitudes) : amp_(amplitudes) {}
  JointState(cplx a00, cplx a01, cplx a10, cplx a11) : amp_{a00, a01, a10, a11} {}

  cplx operator[](std::size_t i) const { return amp_[i]; }
  cplx amplitude(int alice, int bob) const { return amp_[2 * alice + bob]; }
  const std::array<cplx, 4>& amplitudes() const { return amp_; }

  double norm_squared() const;
  /// Probabilities |amp|^2 in basis order.
  std::array<double, 4> probabilities() const;
  /// <this|other>
  cplx inner(const JointState& other) const;

 private:
  std::array<cplx, 4> amp_{};
};

/// Schmidt angle gamma in [0, pi] and its tangent half-angle r = tan(gamma/2).
///
/// gamma = pi is carried as a tagged branch: r() is empty there and every
/// r-based formula must use the cos/sin form instead.
class EntanglementAngle {
 public:
  /// Throws RangeError outside [0, pi].
  explicit EntanglementAngle(double gamma);

  /// Builds from r >= 0 (r = +inf maps to gamma = pi).
  static EntanglementAngle from_r(double r);

  double gamma() const { return gamma_; }
  double cos_gamma() const { return cos_; }
  double sin_gamma() const { return sin_; }
  double cos_half() const { return cos_half_; }
  double sin_half() const { return sin_half_; }

  /// tan(gamma/2), or nullopt on the gamma = pi branch.
  std::optional<double> r() const;
  bool is_pi() const { return is_pi_; }

  /// gamma in {0, pi} within tol::kCondition.
  bool is_separable() const;
  /// gamma = pi/2 within tol::kCondition.
  bool is_maximal() const;

 private:
  double gamma_;
  double cos_;
  double sin_;
  double cos_half_;
  double sin_half_;
  bool is_pi_;
};

LocalUnitary euler_unitary(const EulerAngles& angles);

/// U_A(alpha) (x) U_B(beta) (cos(gamma/2)|0,0> + sin(gamma/2)|1,1>).
JointState build_joint_state(const EulerAngles& alpha, const EulerAngles& beta,
                             const EntanglementAngle& ent);

/// V_A (x) V_B e^{i(phi - pi/2)X/2} e^{i gamma D2/2} |0,0>, where V carries
/// (theta1, theta3) of each player and theta2 of the arguments is ignored.
/// X = (sigma3 (x) 1 + 1 (x) sigma3)/2, D2 = sigma2 (x) sigma2.
JointState build_joint_state_compact(const EulerAngles& alpha_v, const EulerAngles& beta_v,
                                     double phi, const EntanglementAngle& ent);

struct Expansion {
  JointState state;
  cplx gamma_plus;   // cos(gamma/2) + e^{-i phi} sin(gamma/2)
  cplx gamma_minus;  // cos(gamma/2) - e^{-i phi} sin(gamma/2)
  // Gamma_+ or Gamma_- vanishes: gamma = pi/2 with phi = 0 or pi. The angle
  // parametrization is many-to-one there.
  bool degenerate_representation = false;
};

/// Closed-form basis expansion in terms of chi_pm = (alpha1 +- beta1)/2,
/// xi_pm = (alpha3 +- beta3)/2 and the phase sum phi.
Expansion expansion_amplitudes(double alpha1, double beta1, double xi_plus, double xi_minus,
                               double phi, const EntanglementAngle& ent);

/// sum_ij |amp_ij|^2 diag_ij. Throws ValidationError if the state norm is off
/// by more than tol::kValidation.
double expectation_payoff(const JointState& state, std::span<const double, 4> diag);

/// |<s1|s2>| >= 1 - tol
bool states_equal_up_to_phase(const JointState& s1, const JointState& s2, double tol);

/// |a> (x) |b> for single-qubit column vectors.
JointState product_state(const std::array<cplx, 2>& a, const std::array<cplx, 2>& b);

/// V|0> for the local factor V = e^{i t3 sigma3/2} e^{i t1 sigma2/2}.
std::array<cplx, 2> local_state(const EulerAngles& angles);

}  // namespace qgame
