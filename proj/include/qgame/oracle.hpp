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

// Brute-force checks that do not use the closed-form equilibrium formulas:
// numeric best responses, lattice scans for equilibria, and the classical
// mixed equilibrium.

#pragma once

#include <optional>
#include <vector>

#include "qgame/kernels.hpp"
#include "qgame/qne_solver.hpp"

namespace qgame {

enum class BestResponseMode {
  // Search (theta1, own phase); theta3 drops out of the payoff.
  Reduced,
  // Search all three Euler angles through the state vector. Slow; for
  // auditing the reduction.
  FullEuler,
};

struct BestResponseResult {
  double best_payoff = 0.0;
  double theta1 = 0.0;
  double phase = 0.0;  // own second Euler angle
  double improvement_over = 0.0;
};

/// Alice's best reply to an opponent at (opponent_theta1, opponent_phase):
/// grid_n x grid_n lattice, then golden-section coordinate refinement down to
/// a 1e-10 bracket. improvement_over = best_payoff - baseline (0 without one).
BestResponseResult best_response(const PayoffMatrix& a, const EntanglementAngle& ent,
                                 double opponent_theta1, double opponent_phase, int grid_n,
                                 std::optional<double> baseline = std::nullopt,
                                 BestResponseMode mode = BestResponseMode::Reduced,
                                 kernels::Backend backend = kernels::Backend::Serial);

struct VerifyDetail {
  double improvement_a = 0.0;
  double improvement_b = 0.0;
  bool ok = false;
};

/// Both players' best-response gains at p. The phase sum is split by the
/// resolved phases when present, else evenly.
VerifyDetail verify_qne_detail(const PayoffMatrix& a, const EntanglementAngle& ent,
                               const StrategyProfile& p, double eps, int grid_n = 32);

/// True iff neither player gains more than eps by deviating.
bool verify_qne_numeric(const PayoffMatrix& a, const EntanglementAngle& ent,
                        const StrategyProfile& p, double eps, int grid_n = 32);

/// Lattice points on (alpha1, beta1) in [0, pi]^2 (inclusive, grid_n nodes)
/// times phi in [0, 2pi) (grid_n nodes) where no player gains more than
/// 10/grid_n^2. Best responses are computed once per opponent theta1 node.
std::vector<StrategyProfile> brute_force_qne_scan(const PayoffMatrix& a, const EntanglementAngle& ent,
                                                  int grid_n,
                                                  kernels::Backend backend = kernels::Backend::OpenMP);

struct AuditReport {
  int grid_n = 0;
  std::size_t hits = 0;
  // Largest distance from a scan hit to the analytic set, in lattice steps.
  double max_distance_steps = 0.0;
  std::vector<StrategyProfile> uncovered;  // hits beyond the allowed distance
};

/// Checks every scan hit against the analytic set. Distance is the max-norm
/// over (alpha1, beta1) in units of the theta step, with the phi offset in
/// units of the phase step weighted by |sin g sin a1 sin b1|. Continuum
/// families use their curve; all-strategies sets cover everything.
double distance_to_set(const QNESet& set, const StrategyProfile& hit, int grid_n, double sin_gamma);

AuditReport completeness_audit(const PayoffMatrix& a, const EntanglementAngle& ent, int grid_n,
                               double allowed_steps = 2.0,
                               kernels::Backend backend = kernels::Backend::OpenMP);

struct ClassicalMixedNE {
  enum class Status { Exists, NoInterior, NotApplicable };
  Status status = Status::NotApplicable;
  double x = 0.0;  // probability of strategy 0
  double payoff = 0.0;
};

/// Interior symmetric mixed equilibrium of the classical game, present when
/// |s| <= 1.
ClassicalMixedNE classical_mixed_ne(const PayoffMatrix& a);

}  // namespace qgame
