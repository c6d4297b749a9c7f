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

#include "qgame/phase_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace qgame {

namespace {

constexpr double kSlack = tol::kConvexity;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_family(const PayoffMatrix& a, std::initializer_list<FamilyTag> allowed,
                    const char* what) {
  const auto fam = classify_family(a);
  if (std::find(allowed.begin(), allowed.end(), fam.tag) == allowed.end()) {
    throw UsageError(std::string(what) + " needs a matching game, got " + to_string(fam));
  }
}

int sign_of(double x, double eps = 1e-12) { return x > eps ? 1 : (x < -eps ? -1 : 0); }

}  // namespace

double DilemmaIndicators::corner_payoff(int k_alpha, int k_beta) const {
  if (k_alpha == 0 && k_beta == 0) return p(1, 1, 1);
  if (k_alpha == 0 && k_beta == 1) return p(-1, 1, -1);
  if (k_alpha == 1 && k_beta == 0) return p(-1, -1, -1);
  return p(1, -1, 1);
}

DilemmaIndicators dilemma_indicators(const PayoffMatrix& a, const EntanglementAngle& ent) {
  const auto c = coefficients(a);
  const double cg = ent.cos_gamma();
  DilemmaIndicators d;
  d.H_plus = c.a33 + c.a30 * cg;
  d.H_minus = c.a33 - c.a30 * cg;
  d.F = (c.a30 + c.a03) * cg;
  d.G = c.a30 * (c.a30 + c.a03) * cg * cg;
  for (int bits = 0; bits < 8; ++bits) {
    const double s1 = (bits & 4) ? -1.0 : 1.0;
    const double s2 = (bits & 2) ? -1.0 : 1.0;
    const double s3 = (bits & 1) ? -1.0 : 1.0;
    d.P[bits] = c.a00 + s1 * c.a33 + s2 * (c.a30 + s3 * c.a03) * cg;
  }
  return d;
}

std::string to_string(DilemmaTag tag) {
  switch (tag) {
    case DilemmaTag::PD: return "PD";
    case DilemmaTag::BoS: return "BoS";
    case DilemmaTag::SH: return "SH";
  }
  return "?";
}

bool DilemmaReport::has(DilemmaTag t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

DilemmaReport classify_dilemma_typeI(const PayoffMatrix& a, const EntanglementAngle& ent,
                                     bool include_rejected) {
  DilemmaReport rep;
  rep.gamma = ent.gamma();
  rep.qne_set = enumerate_qne(a, ent);
  rep.indicators = dilemma_indicators(a, ent);
  const auto& d = rep.indicators;

  const bool only00_ok = d.H_plus >= -kSlack;
  const bool only11_ok = d.H_minus >= -kSlack;
  const bool mixed_ok = d.H_plus <= kSlack && d.H_minus <= kSlack;

  if (only00_ok && !only11_ok && !mixed_ok) {
    rep.detail.push_back("Type I domain {(0,0)}: H+ >= 0, H- < 0");
    if (d.F <= kSlack) {
      rep.tags.push_back(DilemmaTag::PD);
      rep.detail.push_back("F <= 0: (1,1) pays both players at least as much as (0,0)");
    }
    if (d.F >= -kSlack) rep.table_tags.push_back(DilemmaTag::PD);
  } else if (only11_ok && !only00_ok && !mixed_ok) {
    rep.detail.push_back("Type I domain {(1,1)}: H+ < 0, H- >= 0");
    if (d.F >= -kSlack) {
      rep.tags.push_back(DilemmaTag::PD);
      rep.detail.push_back("F >= 0: (0,0) pays both players at least as much as (1,1)");
    }
    if (d.F <= kSlack) rep.table_tags.push_back(DilemmaTag::PD);
  } else if (mixed_ok && !only00_ok && !only11_ok) {
    rep.detail.push_back("Type I domain {(0,1),(1,0)}: H+ < 0, H- < 0");
    rep.tags.push_back(DilemmaTag::BoS);
    rep.table_tags.push_back(DilemmaTag::BoS);
  } else if (only00_ok && only11_ok && !mixed_ok) {
    rep.detail.push_back("Type I domain {(0,0),(1,1)}: H+ > 0, H- > 0");
    if (d.G < -kSlack) {
      rep.tags.push_back(DilemmaTag::SH);
      rep.detail.push_back("G < 0: the payoff-dominant corner is not risk dominant");
    }
    if (d.G >= -kSlack) rep.table_tags.push_back(DilemmaTag::SH);
  } else {
    rep.detail.push_back("on a Type I domain boundary (H+ or H- vanishes)");
  }

  const auto ops = rep.qne_set.operational(include_rejected);
  // Payoff dominance: one solution at least as good as every other for both
  // players and strictly better than some.
  for (std::size_t i = 0; i < ops.size() && ops.size() > 1; ++i) {
    bool dominates = true, strict = false;
    for (std::size_t j = 0; j < ops.size(); ++j) {
      if (i == j) continue;
      if (ops[i].payoff_a < ops[j].payoff_a - tol::kAlgebraic ||
          ops[i].payoff_b < ops[j].payoff_b - tol::kAlgebraic) {
        dominates = false;
      }
      if (ops[i].payoff_a > ops[j].payoff_a + tol::kAlgebraic ||
          ops[i].payoff_b > ops[j].payoff_b + tol::kAlgebraic) {
        strict = true;
      }
    }
    if (dominates && strict) {
      rep.payoff_dominant = ops[i].label();
      break;
    }
  }

  for (const auto& sol : ops) {
    bool optimal = true;
    for (int ka = 0; ka < 2; ++ka) {
      for (int kb = 0; kb < 2; ++kb) {
        const double pa = d.corner_payoff(ka, kb);
        const double pb = d.corner_payoff(kb, ka);
        if (pa > sol.payoff_a + tol::kValidation && pb > sol.payoff_b + tol::kValidation) {
          optimal = false;
        }
      }
    }
    rep.pareto_flags.emplace_back(sol.label(), optimal);
  }
  return rep;
}

std::pair<double, double> payoff_difference(const PayoffMatrix& a, const EntanglementAngle& ent,
                                            const StrategyProfile& mu, const StrategyProfile& nu) {
  const double da = closed_form_payoff(a, mu.alpha1, mu.beta1, mu.phi, ent).total -
                    closed_form_payoff(a, nu.alpha1, nu.beta1, nu.phi, ent).total;
  const double db = closed_form_payoff_bob(a, mu.alpha1, mu.beta1, mu.phi, ent).total -
                    closed_form_payoff_bob(a, nu.alpha1, nu.beta1, nu.phi, ent).total;
  return {da, db};
}

std::pair<double, double> payoff_difference(const PayoffMatrix& a, const EntanglementAngle& ent,
                                            const QNESolution& mu, const QNESolution& nu) {
  if (std::abs(mu.gamma - nu.gamma) > tol::kAlgebraic ||
      std::abs(mu.gamma - ent.gamma()) > tol::kAlgebraic) {
    throw UsageError("payoff_difference: solutions belong to different gamma");
  }
  return payoff_difference(a, ent, mu.profile, nu.profile);
}

std::vector<std::pair<double, double>> type2_existence_window(const PayoffMatrix& a) {
  const auto c = coefficients(a);
  if (c.a33_zero()) return {};
  const double m = std::abs(*c.s);
  if (c.a33 < 0.0) {
    // |s| |r - 1| <= r + 1
    if (m <= 1.0) return {{0.0, kInf}};
    return {{(m - 1.0) / (m + 1.0), (m + 1.0) / (m - 1.0)}};
  }
  // |s| (r + 1) <= |r - 1|, with r = 1 itself singular
  if (m >= 1.0) return {};
  return {{0.0, (1.0 - m) / (1.0 + m)}, {(1.0 + m) / (1.0 - m), kInf}};
}

std::vector<ChickenRecord> chicken_analysis(const PayoffMatrix& a, const std::vector<double>& gammas) {
  require_family(a, {FamilyTag::Chicken}, "chicken_analysis");
  const auto c = coefficients(a);
  std::vector<ChickenRecord> out;
  out.reserve(gammas.size());
  for (double g : gammas) {
    const EntanglementAngle ent(g);
    const auto rep = classify_dilemma_typeI(a, ent);
    ChickenRecord rec;
    rec.gamma = ent.gamma();
    rec.qne_set = rep.qne_set;
    rec.payoff_01 = rep.indicators.corner_payoff(0, 1);
    rec.payoff_10 = rep.indicators.corner_payoff(1, 0);
    rec.payoff_II = type2_payoff(c, 1, ent);
    rec.d01 = rec.payoff_01 - rec.payoff_II;
    rec.d10 = rec.payoff_10 - rec.payoff_II;
    rec.sign_product = rec.d01 * rec.d10;
    rec.dilemma_unresolved = rec.sign_product <= tol::kAlgebraic;
    rec.bos_degeneracy = ent.is_maximal();
    rec.tags = rep.tags;
    out.push_back(std::move(rec));
  }
  return out;
}

PDReport pd_analysis(const PayoffMatrix& a, const std::vector<double>& gammas) {
  require_family(a, {FamilyTag::PD_PositiveA33, FamilyTag::PD_NegativeA33}, "pd_analysis");
  const auto c = coefficients(a);
  PDReport rep;
  rep.negative_a33 = c.a33 < 0.0;
  rep.u = c.u;
  // H+- = 0 at cos g = -+ 1/s.
  for (double target : {-1.0 / *c.s, 1.0 / *c.s}) {
    if (std::abs(target) <= 1.0 && target > -1.0) {
      rep.type1_boundaries.push_back(std::sqrt((1.0 - target) / (1.0 + target)));
    }
  }
  std::sort(rep.type1_boundaries.begin(), rep.type1_boundaries.end());
  rep.type2_window = type2_existence_window(a);

  for (double g : gammas) {
    const EntanglementAngle ent(g);
    const auto drep = classify_dilemma_typeI(a, ent);
    PDRecord rec;
    rec.gamma = ent.gamma();
    rec.r = ent.r();
    rec.qne_set = drep.qne_set;
    for (const auto& s : rec.qne_set.solutions) {
      if (s.kind == SolutionKind::TypeI) rec.type1_labels.push_back(s.label());
    }
    const QNESolution* t2 = rec.qne_set.find(rep.negative_a33 ? "II(p=1)" : "II(p=0)");
    rec.type2_exists = t2 != nullptr;
    rec.F = drep.indicators.F;
    rec.G = drep.indicators.G;
    rec.type1_not_pareto = rec.type1_labels.size() == 1 && drep.has(DilemmaTag::PD);
    rec.sh_window = rec.type1_labels.size() == 2 && rec.qne_set.find("I(0,0)") &&
                    rec.qne_set.find("I(1,1)") && rec.G <= kSlack;
    if (t2) {
      const StrategyProfile corner{0.0, 0.0, 0.0, {}, {}};
      rec.d00_vs_II = payoff_difference(a, ent, corner, t2->profile).first;
    }
    rec.bos_degeneracy = ent.is_maximal() && rep.negative_a33;
    rec.tags = drep.tags;
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

std::string to_string(AverageOrdering o) {
  switch (o) {
    case AverageOrdering::Classical: return "classical-order";
    case AverageOrdering::Weakened: return "weakened-order";
    case AverageOrdering::Other: return "other";
  }
  return "other";
}

double sh_criterion_vs_11(const GameCoefficients& c, double r) {
  const double s = c.s.value_or(0.0);
  return -(4.0 * c.a33 * s / 3.0) * (r + 1.0) * (r * r - 3.0 * r + 1.0) /
         ((r - 1.0) * (r * r + 1.0));
}

double sh_criterion_vs_typeII(const GameCoefficients& c, double r) {
  const double s = c.s.value_or(0.0);
  const double u_inv = (s + 1.0) / (s - 1.0);
  return 2.0 * c.a33 * (s - 1.0) / 3.0 * (r + u_inv) * (s * r * r + r - s) /
         ((r * r + 1.0) * (r - 1.0));
}

RiskDominanceReport sh_risk_dominance(const PayoffMatrix& a, const EntanglementAngle& ent) {
  require_family(a, {FamilyTag::StagHunt}, "sh_risk_dominance");
  const auto c = coefficients(a);
  RiskDominanceReport rep;
  rep.gamma = ent.gamma();
  rep.r = ent.r();
  if (ent.is_maximal()) {
    rep.maximal_degenerate = true;
    return rep;
  }
  // The Stag Hunt has a33 > 0, so the mixed branch is p = 0.
  const double x = *type2_cosine(*c.s, 0, ent);
  const double cg = ent.cos_gamma();
  rep.type2_exists = std::abs(x) <= 1.0 + tol::kAlgebraic;

  // Corner against the mixed opponent has no interference term.
  rep.Q_minus = c.a00 + c.a33 * x + cg * (c.a30 + c.a03 * x);
  rep.Q_plus = c.a00 - c.a33 * x + cg * (-c.a30 + c.a03 * x);
  rep.R_plus = c.a00 + c.a33 * x + cg * (c.a30 * x + c.a03);
  rep.R_minus = c.a00 - c.a33 * x + cg * (c.a30 * x - c.a03);
  rep.payoff_typeII = type2_payoff(c, 0, ent);

  const auto ind = dilemma_indicators(a, ent);
  rep.avg_k0 = (ind.p(1, 1, 1) + ind.p(-1, 1, -1) + rep.Q_minus) / 3.0;
  rep.avg_k1 = (ind.p(-1, -1, -1) + ind.p(1, -1, 1) + rep.Q_plus) / 3.0;
  rep.avg_typeII = (rep.R_plus + rep.R_minus + rep.payoff_typeII) / 3.0;
  rep.criterion_vs_11 = rep.avg_k0 - rep.avg_k1;
  rep.criterion_vs_typeII = rep.avg_k0 - rep.avg_typeII;

  rep.integral_avg_gaps = {2.0 * c.a30 * cg, c.a30 * cg * (1.0 - x)};

  auto classify = [](double vs11, double vs2) {
    if (vs11 < 0.0 && vs2 < 0.0) return AverageOrdering::Classical;
    if (vs11 > 0.0 && vs2 < 0.0) return AverageOrdering::Weakened;
    return AverageOrdering::Other;
  };
  rep.ordering = classify(rep.criterion_vs_11, rep.criterion_vs_typeII);
  rep.integral_ordering = classify(rep.integral_avg_gaps.first, rep.integral_avg_gaps.second);
  return rep;
}

bool pareto_check(const PayoffMatrix& a, const EntanglementAngle& ent, const StrategyProfile& p,
                  int grid_n, kernels::Backend backend) {
  if (grid_n < 8) throw UsageError("pareto_check needs grid_n >= 8");
  const double pa = closed_form_payoff(a, p.alpha1, p.beta1, p.phi, ent).total;
  const double pb = closed_form_payoff_bob(a, p.alpha1, p.beta1, p.phi, ent).total;
  const kernels::ReducedGame g(a, ent);
  return !kernels::pareto_improvable(g, pa, pb, grid_n, tol::kValidation, backend);
}

SweepResult sweep(const PayoffMatrix& a, const std::vector<double>& gammas, bool include_rejected,
                  kernels::Backend backend) {
  if (gammas.empty()) throw UsageError("sweep needs a non-empty gamma grid");
  std::vector<EntanglementAngle> ents;
  ents.reserve(gammas.size());
  for (double g : gammas) ents.emplace_back(g);

  const long n = static_cast<long>(ents.size());
  std::vector<SweepRecord> recs(static_cast<std::size_t>(n));
  auto fill = [&](long i) {
    const auto& ent = ents[i];
    const auto rep = classify_dilemma_typeI(a, ent, include_rejected);
    SweepRecord& r = recs[i];
    r.gamma = ent.gamma();
    r.r = ent.r();
    r.indicators = rep.indicators;
    r.qne_set = rep.qne_set;
    r.tags = rep.tags;
  };
  if (backend == kernels::Backend::Serial) {
    for (long i = 0; i < n; ++i) fill(i);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) fill(i);
  }
  std::stable_sort(recs.begin(), recs.end(),
                   [](const SweepRecord& x, const SweepRecord& y) { return x.gamma < y.gamma; });

  SweepResult out;
  const auto c = coefficients(a);
  const bool stag_hunt = classify_family(a).tag == FamilyTag::StagHunt;
  const int p = c.a33 > 0.0 ? 0 : 1;

  using Probe = std::optional<double> (*)(const SweepRecord&, const GameCoefficients&, int);
  struct Quantity {
    const char* name;
    Probe probe;
    bool enabled;
  };
  const Quantity quantities[] = {
      {"H_plus", [](const SweepRecord& r, const GameCoefficients&, int) -> std::optional<double> {
         return r.indicators.H_plus;
       }, true},
      {"H_minus", [](const SweepRecord& r, const GameCoefficients&, int) -> std::optional<double> {
         return r.indicators.H_minus;
       }, true},
      {"F", [](const SweepRecord& r, const GameCoefficients&, int) -> std::optional<double> {
         return r.indicators.F;
       }, true},
      {"G", [](const SweepRecord& r, const GameCoefficients&, int) -> std::optional<double> {
         return r.indicators.G;
       }, true},
      {"type2_existence",
       [](const SweepRecord& r, const GameCoefficients& cc, int pp) -> std::optional<double> {
         const auto x = type2_cosine(*cc.s, pp, EntanglementAngle(r.gamma));
         if (!x) return std::nullopt;
         return 1.0 - std::abs(*x);
       },
       !c.a33_zero()},
      // Sign of r^2 - 3r + 1, written as 1 - 1.5 sin g to stay finite at pi.
      {"sh_risk", [](const SweepRecord& r, const GameCoefficients&, int) -> std::optional<double> {
         return 1.0 - 1.5 * std::sin(r.gamma);
       }, stag_hunt},
  };

  for (const auto& q : quantities) {
    if (!q.enabled) continue;
    int last_sign = 0;
    double last_gamma = 0.0;
    for (const auto& r : recs) {
      const auto v = q.probe(r, c, p);
      if (!v) continue;
      const int sg = sign_of(*v);
      if (sg == 0) continue;
      if (last_sign != 0 && sg != last_sign) out.boundaries.push_back({q.name, last_gamma, r.gamma});
      last_sign = sg;
      last_gamma = r.gamma;
    }
  }
  std::stable_sort(out.boundaries.begin(), out.boundaries.end(),
                   [](const SweepBoundary& x, const SweepBoundary& y) {
                     return x.gamma_lo < y.gamma_lo;
                   });
  out.records = std::move(recs);
  return out;
}

}  // namespace qgame
