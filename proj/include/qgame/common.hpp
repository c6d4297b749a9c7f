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

#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

namespace qgame {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

namespace tol {
// Algebraic identities on 4-dimensional states and closed forms.
inline constexpr double kAlgebraic = 1e-12;
// Input validation gates (normalization, probability range).
inline constexpr double kValidation = 1e-9;
// Equality tests on classification conditions (a33 = 0, s = +-1, gamma = pi/2).
inline constexpr double kCondition = 1e-9;
// Values closer than this to a classification boundary get a warning note.
inline constexpr double kWarningBand = 1e-6;
// Accepted slack on Hessian eigenvalues (weak inequality Lambda <= 0).
inline constexpr double kConvexity = 1e-9;
}  // namespace tol

/// Angle or probability outside its declared domain.
class RangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A value violates a structural invariant (e.g. a non-normalized state).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on inputs it is not defined for
/// (wrong game family, mixed entanglement levels, empty grid).
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline bool near_zero(double x, double eps = tol::kCondition) {
  return x <= eps && x >= -eps;
}

}  // namespace qgame
