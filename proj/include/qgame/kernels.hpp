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

// Lattice kernels over the reduced strategy coordinates (theta1, phase).
//
// Every kernel has a serial reference and an OpenMP version selected by
// Backend. Both produce identical results: reductions break ties by the
// smallest linear index and hit lists are returned in index order.

#pragma once

#include <cstdint>
#include <vector>

#include "qgame/game_model.hpp"

namespace qgame::kernels {

enum class Backend { Serial, OpenMP };

/// The game at a fixed entanglement level, ready for inner loops.
struct ReducedGame {
  GameCoefficients c;
  double cos_gamma = 1.0;
  double sin_gamma = 0.0;

  ReducedGame(const PayoffMatrix& a, const EntanglementAngle& ent)
      : c(coefficients(a)), cos_gamma(ent.cos_gamma()), sin_gamma(ent.sin_gamma()) {}

  double alice(double alpha1, double beta1, double phi) const;
};

/// Node k of an inclusive grid on [0, pi] with n nodes.
inline double theta_node(int k, int n) { return kPi * k / (n - 1); }
/// Node k of a periodic grid on [0, 2pi) with n nodes.
inline double phase_node(int k, int n) { return kTwoPi * k / n; }

struct GridArgmax {
  double payoff = 0.0;
  int i_theta = 0;
  int i_phase = 0;
};

/// Alice's payoff over theta1 nodes (inclusive, n) x own-phase nodes
/// (periodic, n) with the opponent fixed. Ties go to the smaller theta1
/// index, then the smaller phase index.
GridArgmax best_response_grid(const ReducedGame& g, double opponent_theta1, double opponent_phase,
                              int n, Backend backend);

struct ScanHit {
  std::int64_t index = 0;  // (i_alpha * n + i_beta) * n + i_phi
  int i_alpha = 0;
  int i_beta = 0;
  int i_phi = 0;
  double gain_a = 0.0;
  double gain_b = 0.0;
};

/// Lattice points (alpha1, beta1, phi) where neither player gains more than
/// eps by deviating. best_by_theta[k] is a player's best attainable payoff
/// against an opponent at theta_node(k, n); it does not depend on the
/// opponent's phase.
std::vector<ScanHit> qne_scan(const ReducedGame& g, const std::vector<double>& best_by_theta,
                              int n, double eps, Backend backend);

/// True iff some lattice point improves both payoffs by more than tol over
/// (base_a, base_b).
bool pareto_improvable(const ReducedGame& g, double base_a, double base_b, int n, double tol,
                       Backend backend);

/// Number of OpenMP threads the OpenMP backend will use.
int max_threads();

}  // namespace qgame::kernels
