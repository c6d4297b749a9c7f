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
#include "qgame/oracle.hpp"

using namespace qgame;

namespace {

const PayoffMatrix kChicken(3, 1, 4, 0);
const PayoffMatrix kPD(3, 0, 5, 1);
const PayoffMatrix kSH(5, 1, 4, 3);
const PayoffMatrix kT3(0, 2, 3, 2);

}  // namespace

TEST_CASE("best response examples") {
  const auto c = best_response(kChicken, EntanglementAngle(0.0), kPi, 0.0, 32);
  CHECK(c.theta1 == doctest::Approx(0.0).epsilon(1e-8).scale(1));
  CHECK(c.best_payoff == doctest::Approx(1.0));
  for (double opp : {0.0, 1.0, 2.0, kPi}) {
    const auto d = best_response(kPD, EntanglementAngle(0.0), opp, 0.0, 32);
    CHECK(d.theta1 == doctest::Approx(kPi));
  }
  const EntanglementAngle half(kPi / 2);
  const auto ii = type2_qne(kChicken, half);
  REQUIRE(ii.solution);
  const auto r = resolve_phases(ii.solution->profile, SolutionKind::TypeII);
  const auto b = best_response(kChicken, half, r.beta1, *r.resolved_beta2, 32, ii.solution->payoff_a);
  CHECK(b.improvement_over <= 1e-6);
}

TEST_CASE("best response reaches the exact optimum") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& nm : testkit::audit_matrices()) {
    for (int k = 0; k < 5; ++k) {
      const double g = u(rng) * kPi, opp = u(rng) * kPi, ph = u(rng) * kTwoPi;
      const auto b = best_response(nm.m, EntanglementAngle(g), opp, ph, 16);
      CAPTURE(nm.name);
      CHECK(b.best_payoff == doctest::Approx(testkit::exact_best_payoff(nm.m, opp, g)).epsilon(1e-9));
    }
  }
}

TEST_CASE("best response does not decrease with grid size") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    const EntanglementAngle ent(u(rng) * kPi);
    const double opp = u(rng) * kPi, ph = u(rng) * kTwoPi;
    double last = -1e300;
    for (int n : {16, 32, 64}) {
      const double v = best_response(kSH, ent, opp, ph, n).best_payoff;
      CHECK(v >= last - 1e-12);
      last = v;
    }
  }
}

TEST_CASE("full Euler search agrees with the reduced search") {
  for (double g : {0.3, 1.4, 2.8}) {
    for (double opp : {0.2, 1.9}) {
      const auto r = best_response(kChicken, EntanglementAngle(g), opp, 0.7, 16);
      const auto f = best_response(kChicken, EntanglementAngle(g), opp, 0.7, 16, std::nullopt,
                                   BestResponseMode::FullEuler);
      CHECK(f.best_payoff == doctest::Approx(r.best_payoff).epsilon(1e-8));
    }
  }
}

TEST_CASE("verify examples") {
  for (const auto* m : {&kChicken, &kPD, &kSH, &kT3}) {
    for (double g : testkit::audit_gammas()) {
      const EntanglementAngle ent(g);
      for (const auto& s : enumerate_qne(*m, ent).operational()) {
        CAPTURE(s.label());
        if (s.is_continuum()) {
          for (const auto& p : s.curve->sample(5)) CHECK(verify_qne_numeric(*m, ent, p, 1e-6));
        } else {
          CHECK(verify_qne_numeric(*m, ent, resolve_phases(s.profile, s.kind), 1e-6));
        }
      }
    }
  }
  const auto d = verify_qne_detail(kChicken, EntanglementAngle(0.0), {0.0, 0.0, 0.0, {}, {}}, 1e-6);
  CHECK_FALSE(d.ok);
  CHECK(d.improvement_a == doctest::Approx(1.0));
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    const StrategyProfile p{u(rng) * kPi, u(rng) * kPi, u(rng) * kTwoPi, {}, {}};
    CHECK(verify_qne_numeric(PayoffMatrix(1, 2, 1, 2), EntanglementAngle(u(rng) * kPi), p, 1e-6));
  }
}

TEST_CASE("the scan finds the Chicken equilibria") {
  const int n = 32;
  const double h = kPi / (n - 1);
  const auto hits = brute_force_qne_scan(kChicken, EntanglementAngle(kPi / 4), n);
  auto near = [&](double a, double b, std::optional<double> phi) {
    return std::any_of(hits.begin(), hits.end(), [&](const StrategyProfile& p) {
      return std::abs(p.alpha1 - a) <= h + 1e-12 && std::abs(p.beta1 - b) <= h + 1e-12 &&
             (!phi || std::abs(p.phi - *phi) <= kTwoPi / n + 1e-12);
    });
  };
  CHECK(near(0.0, kPi, std::nullopt));
  CHECK(near(kPi, 0.0, std::nullopt));
  CHECK(near(kPi / 2, kPi / 2, kPi));
}

TEST_CASE("scan hits for the Type III game follow the curve") {
  const int n = 32;
  const EntanglementAngle ent(kPi / 3);
  const auto set = enumerate_qne(kT3, ent);
  const auto* t3 = set.find("III(sigma=0)");
  REQUIRE(t3);
  const auto hits = brute_force_qne_scan(kT3, ent, n);
  REQUIRE_FALSE(hits.empty());
  // the curve passes through the lattice region the hits occupy
  int on_curve = 0;
  for (const auto& p : hits)
    if (t3->curve->distance(p.alpha1, p.beta1) <= kPi / (n - 1)) ++on_curve;
  CHECK(on_curve > 0);
  for (const auto& s : t3->curve->sample(9)) {
    const bool covered = std::any_of(hits.begin(), hits.end(), [&](const StrategyProfile& p) {
      return std::max(std::abs(p.alpha1 - s.alpha1), std::abs(p.beta1 - s.beta1)) <= kPi / (n - 1);
    });
    CHECK(covered);
  }
}

TEST_CASE("Stag Hunt at maximal entanglement: hits on the rejected diagonal") {
  const int n = 32;
  const EntanglementAngle ent(kPi / 2);
  const auto set = enumerate_qne(kSH, ent);
  const auto* diff = set.find("IV_diff_rejected");
  REQUIRE(diff);
  const auto hits = brute_force_qne_scan(kSH, ent, n);
  int diagonal = 0;
  for (const auto& p : hits) {
    if (diff->curve->distance(p.alpha1, p.beta1) <= kPi / (n - 1) && std::min(p.phi, kTwoPi - p.phi) <= kTwoPi / n)
      ++diagonal;
  }
  CHECK(diagonal > 4);
}

TEST_CASE("classical mixed equilibrium") {
  const auto c = classical_mixed_ne(kChicken);
  CHECK(c.status == ClassicalMixedNE::Status::Exists);
  CHECK(c.payoff == doctest::Approx(2.0));
  CHECK(classical_mixed_ne(kPD).status == ClassicalMixedNE::Status::NoInterior);
  const auto s = classical_mixed_ne(PayoffMatrix(2, 0, 0, 2));
  CHECK(s.x == doctest::Approx(0.5));
  CHECK(s.payoff == doctest::Approx(1.0));
  CHECK(classical_mixed_ne(PayoffMatrix(2, 3, 0, 1)).status == ClassicalMixedNE::Status::NotApplicable);
  // the mixed profile really is an equilibrium of the classical game
  const auto [pa, pb] = classical_payoff(kChicken, c.x, c.x);
  CHECK(pa == doctest::Approx(classical_payoff(kChicken, 1.0, c.x).first));
  CHECK(pa == doctest::Approx(classical_payoff(kChicken, 0.0, c.x).first));
  CHECK(pb == doctest::Approx(pa));
}

TEST_CASE("audit distance") {
  const auto set = enumerate_qne(kChicken, EntanglementAngle(kPi / 4));
  const int n = 48;
  const double h = kPi / (n - 1);
  const StrategyProfile on{0.0, kPi, 2.0, {}, {}};
  CHECK(distance_to_set(set, on, n, std::sin(kPi / 4)) == doctest::Approx(0.0));
  const StrategyProfile two{2 * h, kPi - h, 0.0, {}, {}};
  CHECK(distance_to_set(set, two, n, std::sin(kPi / 4)) == doctest::Approx(2.0));
  const auto deg = enumerate_qne(PayoffMatrix(1, 2, 1, 2), EntanglementAngle(1.0));
  CHECK(distance_to_set(deg, {1.0, 2.0, 3.0, {}, {}}, n, std::sin(1.0)) == 0.0);
}
