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

// Phase structure over gamma: Type I indicators, dilemma tags, payoff
// comparisons between equilibria and the case studies for Chicken, the
// Prisoners' Dilemma and the Stag Hunt.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgame/kernels.hpp"
#include "qgame/qne_solver.hpp"

namespace qgame {

struct DilemmaIndicators {
  double H_plus = 0.0;   // a33 + a30 cos g
  double H_minus = 0.0;  // a33 - a30 cos g
  double F = 0.0;        // (a30 + a03) cos g
  double G = 0.0;        // a30 (a30 + a03) cos^2 g
  // P[s1 s2 s3] = a00 + s1 a33 + s2 (a30 + s3 a03) cos g, indexed by the
  // bits of (s1 < 0, s2 < 0, s3 < 0).
  std::array<double, 8> P{};

  double p(int s1, int s2, int s3) const {
    return P[(s1 < 0 ? 4 : 0) + (s2 < 0 ? 2 : 0) + (s3 < 0 ? 1 : 0)];
  }
  /// Alice's payoff at Type I corner (k_alpha, k_beta).
  double corner_payoff(int k_alpha, int k_beta) const;
};

DilemmaIndicators dilemma_indicators(const PayoffMatrix& a, const EntanglementAngle& ent);

enum class DilemmaTag { PD, BoS, SH };
std::string to_string(DilemmaTag tag);

struct DilemmaReport {
  double gamma = 0.0;
  QNESet qne_set;
  DilemmaIndicators indicators;
  // Tags from the text's conditions: (0,0) alone is not Pareto optimal for
  // F <= 0, (1,1) alone for F >= 0; the Stag Hunt conflict needs G < 0.
  std::vector<DilemmaTag> tags;
  // The same rows read with the table's printed conventions (F >= 0 paired
  // with (0,0), G >= 0 for the Stag Hunt row). Kept for comparison.
  std::vector<DilemmaTag> table_tags;
  std::optional<std::string> payoff_dominant;
  // Per solution label: no Type I corner improves both payoffs.
  std::vector<std::pair<std::string, bool>> pareto_flags;
  std::vector<std::string> detail;

  bool has(DilemmaTag t) const;
};

/// Dilemma classification from the Type I domains at this gamma.
DilemmaReport classify_dilemma_typeI(const PayoffMatrix& a, const EntanglementAngle& ent,
                                     bool include_rejected = false);

/// (Pi_A(mu) - Pi_A(nu), Pi_B(mu) - Pi_B(nu)). Throws UsageError when the
/// solutions come from different gamma.
std::pair<double, double> payoff_difference(const PayoffMatrix& a, const EntanglementAngle& ent,
                                            const QNESolution& mu, const QNESolution& nu);

/// Same for two explicit profiles.
std::pair<double, double> payoff_difference(const PayoffMatrix& a, const EntanglementAngle& ent,
                                            const StrategyProfile& mu, const StrategyProfile& nu);

/// Type II existence in r: the closed intervals where |cos alpha1*| <= 1 for
/// the branch selected by sign(a33). Upper ends may be +inf.
std::vector<std::pair<double, double>> type2_existence_window(const PayoffMatrix& a);

struct ChickenRecord {
  double gamma = 0.0;
  QNESet qne_set;
  double payoff_01 = 0.0;  // Alice at I(0,1)
  double payoff_10 = 0.0;  // Alice at I(1,0)
  double payoff_II = 0.0;
  double d01 = 0.0;        // Pi_A(I(0,1)) - Pi_A(II)
  double d10 = 0.0;        // Pi_A(I(1,0)) - Pi_A(II)
  double sign_product = 0.0;
  bool dilemma_unresolved = true;
  bool bos_degeneracy = false;  // gamma = pi/2
  std::vector<DilemmaTag> tags;
};

/// Requires classify_family(a) == Chicken.
std::vector<ChickenRecord> chicken_analysis(const PayoffMatrix& a, const std::vector<double>& gammas);

struct PDRecord {
  double gamma = 0.0;
  std::optional<double> r;
  QNESet qne_set;
  std::vector<std::string> type1_labels;
  bool type2_exists = false;
  double F = 0.0;
  double G = 0.0;
  // Evidence that the only Type I equilibrium is not Pareto optimal.
  bool type1_not_pareto = false;
  bool sh_window = false;  // G <= 0 with two Type I solutions
  // Pi(I(0,0)) - Pi(II); positive means the mixed solution is not Pareto optimal.
  std::optional<double> d00_vs_II;
  bool bos_degeneracy = false;
  std::vector<DilemmaTag> tags;
};

struct PDReport {
  bool negative_a33 = false;
  std::optional<double> u;
  // r values where a Type I convexity condition changes sign.
  std::vector<double> type1_boundaries;
  std::vector<std::pair<double, double>> type2_window;
  std::vector<PDRecord> records;
};

/// Requires classify_family(a) in {PD_PositiveA33, PD_NegativeA33}.
PDReport pd_analysis(const PayoffMatrix& a, const std::vector<double>& gammas);

enum class AverageOrdering { Classical, Weakened, Other };
std::string to_string(AverageOrdering o);

struct RiskDominanceReport {
  double gamma = 0.0;
  std::optional<double> r;
  // r = 1: (r - 1) denominators; nothing below is evaluated.
  bool maximal_degenerate = false;
  bool type2_exists = false;

  double Q_plus = 0.0;   // Alice at 1 against the mixed opponent
  double Q_minus = 0.0;  // Alice at 0 against the mixed opponent
  double R_plus = 0.0;   // mixed Alice against opponent 0
  double R_minus = 0.0;  // mixed Alice against opponent 1
  double payoff_typeII = 0.0;

  double avg_k0 = 0.0;
  double avg_k1 = 0.0;
  double avg_typeII = 0.0;
  double criterion_vs_11 = 0.0;      // avg_k0 - avg_k1
  double criterion_vs_typeII = 0.0;  // avg_k0 - avg_typeII

  // Uniform average over the opponent: a00 + a30 cos g cos alpha1.
  std::pair<double, double> integral_avg_gaps{0.0, 0.0};  // (vs (1,1), vs Type II)

  AverageOrdering ordering = AverageOrdering::Other;
  AverageOrdering integral_ordering = AverageOrdering::Other;
};

/// Requires classify_family(a) == StagHunt.
RiskDominanceReport sh_risk_dominance(const PayoffMatrix& a, const EntanglementAngle& ent);

/// Closed forms of the two criteria as functions of r (r != 1).
double sh_criterion_vs_11(const GameCoefficients& c, double r);
double sh_criterion_vs_typeII(const GameCoefficients& c, double r);

/// Grid-limited Pareto test on a grid_n^3 lattice over (alpha1, beta1, phi).
/// A necessary condition only.
bool pareto_check(const PayoffMatrix& a, const EntanglementAngle& ent, const StrategyProfile& p,
                  int grid_n = 64, kernels::Backend backend = kernels::Backend::OpenMP);

struct SweepRecord {
  double gamma = 0.0;
  std::optional<double> r;
  DilemmaIndicators indicators;
  QNESet qne_set;
  std::vector<DilemmaTag> tags;
};

struct SweepBoundary {
  std::string quantity;  // H_plus, H_minus, F, G, type2_existence, sh_risk
  double gamma_lo = 0.0;
  double gamma_hi = 0.0;
};

struct SweepResult {
  std::vector<SweepRecord> records;  // sorted by gamma
  std::vector<SweepBoundary> boundaries;
};

/// Per-gamma indicators, equilibria and tags. Throws UsageError on an empty
/// grid and RangeError for gamma outside [0, pi].
SweepResult sweep(const PayoffMatrix& a, const std::vector<double>& gammas,
                  bool include_rejected = false,
                  kernels::Backend backend = kernels::Backend::OpenMP);

}  // namespace qgame
