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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "qgame/phase_analysis.hpp"

using namespace qgame;

namespace {

const PayoffMatrix kChicken(3, 1, 4, 0);
const PayoffMatrix kPD(3, 0, 5, 1);
const PayoffMatrix kSH(5, 1, 4, 3);

double gamma_of_r(double r) { return 2 * std::atan(r); }

bool has_tag(const std::vector<DilemmaTag>& v, DilemmaTag t) {
  return std::find(v.begin(), v.end(), t) != v.end();
}

// Opponent-averaged payoff by quadrature: beta1 uniform on [0, pi], phi on [0, 2 pi].
double averaged_payoff(const PayoffMatrix& a, double alpha1, const EntanglementAngle& ent) {
  const long double outer = testkit::simpson(
      [&](long double b) {
        return testkit::simpson(
                   [&](long double phi) {
                     return (long double)closed_form_payoff(a, alpha1, double(b), double(phi), ent).total;
                   },
                   0.0L, 2 * kPi, 64) /
               (2 * kPi);
      },
      0.0L, kPi, 64);
  return double(outer / kPi);
}

}  // namespace

TEST_CASE("indicator examples") {
  for (double g : {0.0, 0.9, 2.2}) {
    const auto d = dilemma_indicators(kChicken, EntanglementAngle(g));
    CHECK(d.H_plus == doctest::Approx(-0.5));
    CHECK(d.H_minus == doctest::Approx(-0.5));
  }
  const auto sh = dilemma_indicators(kSH, EntanglementAngle(0.0));
  CHECK(sh.H_plus == doctest::Approx(0.5));
  CHECK(sh.H_minus == doctest::Approx(1.0));
  CHECK(sh.F == doctest::Approx(1.0));
  CHECK(sh.G == doctest::Approx(-0.25));
  for (const auto& nm : testkit::audit_matrices()) {
    const auto d = dilemma_indicators(nm.m, EntanglementAngle(kPi / 2));
    CHECK(std::abs(d.F) < 1e-15);
    CHECK(std::abs(d.G) < 1e-15);
  }
}

TEST_CASE("corner payoffs match the closed-form payoff") {
  for (const auto& nm : testkit::audit_matrices()) {
    for (double g : {0.0, 0.7, 2.0}) {
      const EntanglementAngle ent(g);
      const auto d = dilemma_indicators(nm.m, ent);
      for (int ka = 0; ka < 2; ++ka)
        for (int kb = 0; kb < 2; ++kb)
          CHECK(d.corner_payoff(ka, kb) ==
                doctest::Approx(closed_form_payoff(nm.m, ka * kPi, kb * kPi, 0.0, ent).total));
    }
  }
}

TEST_CASE("dilemma tags") {
  for (int k = 0; k <= 10; ++k) {
    const auto rep = classify_dilemma_typeI(kChicken, EntanglementAngle(kPi * k / 10));
    CHECK(rep.has(DilemmaTag::BoS));
  }
  const auto pd = classify_dilemma_typeI(kPD, EntanglementAngle(0.0));
  CHECK(pd.indicators.F == doctest::Approx(1.0));
  CHECK(pd.has(DilemmaTag::PD));
  const auto sh = classify_dilemma_typeI(kSH, EntanglementAngle(0.0));
  CHECK(sh.indicators.G == doctest::Approx(-0.25));
  CHECK(sh.has(DilemmaTag::SH));
  REQUIRE(sh.payoff_dominant);
  CHECK(*sh.payoff_dominant == "I(0,0)");
}

TEST_CASE("payoff difference against the closed form for Chicken") {
  const auto c = coefficients(kChicken);
  for (double r : {0.0, 0.3, 0.8, 1.0, 1.7, 4.0}) {
    const EntanglementAngle ent(gamma_of_r(r));
    const auto set = enumerate_qne(kChicken, ent);
    const auto* s01 = set.find("I(0,1)");
    const auto* s2 = set.find("II(p=1)");
    REQUIRE(s01);
    REQUIRE(s2);
    const auto [da, db] = payoff_difference(kChicken, ent, *s01, *s2);
    const double closed = c.a33 * (*c.s + 1) * (*c.t - 1) * (r - *c.u / *c.v) * (r - 1) / (r * r + 1);
    CHECK(da == doctest::Approx(closed).epsilon(1e-12));
    CHECK(db == doctest::Approx(s01->payoff_b - s2->payoff_b));
    if (r == 1.0) CHECK(std::abs(da) < 1e-12);
  }
  const auto set = enumerate_qne(kChicken, EntanglementAngle(0.4));
  const auto [z1, z2] = payoff_difference(kChicken, EntanglementAngle(0.4), set.solutions[0], set.solutions[0]);
  CHECK(z1 == 0.0);
  CHECK(z2 == 0.0);
  const auto other = enumerate_qne(kChicken, EntanglementAngle(0.5));
  CHECK_THROWS_AS(payoff_difference(kChicken, EntanglementAngle(0.4), set.solutions[0], other.solutions[0]),
                  UsageError);
}

TEST_CASE("PD: the mixed solution is not Pareto optimal below sqrt(u)") {
  const EntanglementAngle ent(gamma_of_r(0.6));
  const auto t2 = type2_qne(kPD, ent);
  REQUIRE(t2.solution);
  const auto [da, db] = payoff_difference(kPD, ent, StrategyProfile{0.0, 0.0, 0.0, {}, {}}, t2.solution->profile);
  CHECK(da > 0.0);
  CHECK(da == doctest::Approx(db));
  const double direct = closed_form_payoff(kPD, 0, 0, 0, ent).total - t2.solution->payoff_a;
  CHECK(da == doctest::Approx(direct));
}

TEST_CASE("Type II existence windows") {
  const auto pd = type2_existence_window(kPD);
  REQUIRE(pd.size() == 1);
  CHECK(pd[0].first == doctest::Approx(0.5));
  CHECK(pd[0].second == doctest::Approx(2.0));
  const auto sh = type2_existence_window(kSH);
  REQUIRE(sh.size() == 2);
  CHECK(sh[0].first == doctest::Approx(0.0));
  CHECK(sh[0].second == doctest::Approx(0.5));
  CHECK(sh[1].first == doctest::Approx(2.0));
  CHECK(std::isinf(sh[1].second));
  // window agrees with the solver on a dense r grid
  for (const auto* m : {&kPD, &kSH, &kChicken}) {
    const auto win = type2_existence_window(*m);
    for (int k = 1; k < 400; ++k) {
      const double r = 4.0 * k / 400;
      if (std::abs(r - 1.0) < 1e-12) continue;
      const bool in = std::any_of(win.begin(), win.end(), [&](auto w) {
        return r > w.first + 1e-9 && r < w.second - 1e-9;
      });
      const bool out = std::all_of(win.begin(), win.end(), [&](auto w) {
        return r < w.first - 1e-9 || r > w.second + 1e-9;
      });
      const auto t = type2_qne(*m, EntanglementAngle(gamma_of_r(r)));
      if (in) CHECK(t.status == Type2Outcome::Status::Exists);
      if (out) CHECK(t.status != Type2Outcome::Status::Exists);
    }
  }
}

TEST_CASE("Chicken analysis") {
  const auto recs = chicken_analysis(kChicken, {0.0, kPi / 2});
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].payoff_01 == doctest::Approx(1.0));
  CHECK(recs[0].payoff_10 == doctest::Approx(4.0));
  CHECK(recs[0].payoff_II == doctest::Approx(2.0));
  CHECK(recs[0].dilemma_unresolved);
  CHECK(recs[1].payoff_01 == doctest::Approx(2.5));
  CHECK(recs[1].payoff_10 == doctest::Approx(2.5));
  CHECK(recs[1].payoff_II == doctest::Approx(2.5));
  CHECK(recs[1].bos_degeneracy);
  CHECK(has_tag(recs[1].tags, DilemmaTag::BoS));
  CHECK_THROWS_AS(chicken_analysis(kPD, {0.0}), UsageError);
  for (const auto& nm : testkit::family_matrices(FamilyTag::Chicken)) {
    std::vector<double> gs;
    for (int k = 0; k <= 40; ++k) gs.push_back(kPi * k / 40);
    for (const auto& r : chicken_analysis(nm.m, gs)) CHECK(r.sign_product <= 1e-12);
  }
}

TEST_CASE("PD analysis") {
  const std::vector<double> gs = {gamma_of_r(0.3), kPi / 2};
  const auto rep = pd_analysis(kPD, gs);
  CHECK(rep.negative_a33);
  REQUIRE(rep.type1_boundaries.size() == 2);
  CHECK(rep.type1_boundaries[0] == doctest::Approx(std::sqrt(0.5)));
  CHECK(rep.type1_boundaries[1] == doctest::Approx(std::sqrt(2.0)));
  REQUIRE(rep.type2_window.size() == 1);
  CHECK(rep.type2_window[0].first == doctest::Approx(0.5));
  CHECK(rep.type2_window[0].second == doctest::Approx(2.0));
  REQUIRE(rep.records.size() == 2);
  CHECK(rep.records[0].type1_labels == std::vector<std::string>{"I(1,1)"});
  CHECK_FALSE(rep.records[0].type2_exists);
  CHECK(rep.records[0].F > 0.0);
  CHECK(rep.records[0].type1_not_pareto);
  CHECK(rep.records[1].qne_set.find("IV_sum") != nullptr);
  CHECK(rep.records[1].bos_degeneracy);
  CHECK_THROWS_AS(pd_analysis(kChicken, gs), UsageError);
  const auto pos = pd_analysis(PayoffMatrix(4, 0, 5, 2), gs);
  CHECK_FALSE(pos.negative_a33);
}

TEST_CASE("Stag Hunt risk dominance") {
  const auto c = coefficients(kSH);
  const auto in = sh_risk_dominance(kSH, EntanglementAngle(gamma_of_r(0.45)));
  CHECK(in.type2_exists);
  CHECK(in.criterion_vs_11 > 0.0);
  CHECK(in.criterion_vs_typeII <= 0.0);
  CHECK(in.ordering == AverageOrdering::Weakened);
  const auto out = sh_risk_dominance(kSH, EntanglementAngle(gamma_of_r(0.2)));
  CHECK(out.criterion_vs_11 < 0.0);
  CHECK(out.ordering == AverageOrdering::Classical);
  CHECK(sh_risk_dominance(kSH, EntanglementAngle(kPi / 2)).maximal_degenerate);
  CHECK_THROWS_AS(sh_risk_dominance(kPD, EntanglementAngle(0.2)), UsageError);

  // closed forms, and the window bound by the conversion formula
  for (double r : {0.05, 0.2, 0.39, 0.45, 0.5}) {
    const auto rep = sh_risk_dominance(kSH, EntanglementAngle(gamma_of_r(r)));
    CHECK(rep.criterion_vs_11 == doctest::Approx(sh_criterion_vs_11(c, r)).epsilon(1e-10));
    CHECK(rep.criterion_vs_typeII == doctest::Approx(sh_criterion_vs_typeII(c, r)).epsilon(1e-10));
    const double direct = -(4 * c.a33 * *c.s / 3) * (r + 1) / (r - 1) * (1 - 3 * r / (r * r + 1));
    CHECK(sh_criterion_vs_11(c, r) == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("Stag Hunt effective payoffs match their definitions") {
  for (const auto& nm : testkit::family_matrices(FamilyTag::StagHunt)) {
    for (double r : {0.1, 0.3, 0.45}) {
      const EntanglementAngle ent(gamma_of_r(r));
      const auto rep = sh_risk_dominance(nm.m, ent);
      if (!rep.type2_exists) continue;
      const auto t2 = type2_qne(nm.m, ent);
      REQUIRE(t2.solution);
      const double star = t2.solution->profile.alpha1;
      const double phi = t2.solution->profile.phi;
      auto pa = [&](double a1, double b1) { return closed_form_payoff(nm.m, a1, b1, phi, ent).total; };
      CAPTURE(nm.name);
      CHECK(rep.Q_minus == doctest::Approx(pa(0.0, star)));
      CHECK(rep.Q_plus == doctest::Approx(pa(kPi, star)));
      CHECK(rep.R_plus == doctest::Approx(pa(star, 0.0)));
      CHECK(rep.R_minus == doctest::Approx(pa(star, kPi)));
      CHECK(rep.payoff_typeII == doctest::Approx(t2.solution->payoff_a));
    }
  }
}

TEST_CASE("integral-average gaps against quadrature") {
  for (double r : {0.2, 0.45}) {
    const EntanglementAngle ent(gamma_of_r(r));
    const auto rep = sh_risk_dominance(kSH, ent);
    REQUIRE(rep.type2_exists);
    const double star = type2_qne(kSH, ent).solution->profile.alpha1;
    const double a0 = averaged_payoff(kSH, 0.0, ent);
    CHECK(rep.integral_avg_gaps.first == doctest::Approx(a0 - averaged_payoff(kSH, kPi, ent)).epsilon(1e-9));
    CHECK(rep.integral_avg_gaps.second == doctest::Approx(a0 - averaged_payoff(kSH, star, ent)).epsilon(1e-9));
  }
}

TEST_CASE("Pareto check examples") {
  CHECK_FALSE(pareto_check(kPD, EntanglementAngle(0.0), {kPi, kPi, 0.0, {}, {}}));
  CHECK_FALSE(pareto_check(kChicken, EntanglementAngle(0.0), {kPi / 2, kPi / 2, kPi, {}, {}}));
  CHECK(pareto_check(kSH, EntanglementAngle(0.0), {0.0, 0.0, 0.0, {}, {}}));
  CHECK_THROWS(pareto_check(kSH, EntanglementAngle(0.0), {0.0, 0.0, 0.0, {}, {}}, 4));
}

TEST_CASE("sweep over Chicken") {
  const auto res = sweep(kChicken, {0.0, kPi / 4, kPi / 2});
  REQUIRE(res.records.size() == 3);
  const double want[] = {2.0, 2.0 + 0.5 * std::sin(kPi / 4), 2.5};
  for (int k = 0; k < 3; ++k) {
    const auto* s = res.records[k].qne_set.find("II(p=1)");
    REQUIRE(s);
    CHECK(s->payoff_a == doctest::Approx(want[k]));
  }
  CHECK_THROWS(sweep(kChicken, {}));
  CHECK_THROWS_AS(sweep(kChicken, {0.0, 4.0}), RangeError);
}

TEST_CASE("sweep over Stag Hunt brackets the risk-dominance window") {
  std::vector<double> gs;
  for (int k = 0; k <= 100; ++k) gs.push_back(kPi * k / 100);
  const auto res = sweep(kSH, gs);
  const double step = kPi / 100;
  auto bracketed = [&](const std::string& q, double r) {
    const double g = gamma_of_r(r);
    return std::any_of(res.boundaries.begin(), res.boundaries.end(), [&](const SweepBoundary& b) {
      return b.quantity == q && b.gamma_lo <= g + 1e-12 && b.gamma_hi >= g - 1e-12 &&
             b.gamma_hi - b.gamma_lo <= step + 1e-12;
    });
  };
  CHECK(bracketed("sh_risk", (3 - std::sqrt(5.0)) / 2));
  CHECK(bracketed("type2_existence", -1.0 / *coefficients(kSH).u));
}
