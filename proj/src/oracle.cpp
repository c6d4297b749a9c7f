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

#include "qgame/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace qgame {

namespace {

constexpr double kBracket = 1e-10;
constexpr int kMaxSweeps = 64;
const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

double wrap_phase(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  if (y >= kTwoPi) y = 0.0;
  return y;
}

double circular_gap(double x, double y) {
  const double d = std::abs(wrap_phase(x) - wrap_phase(y));
  return std::min(d, kTwoPi - d);
}

// Golden-section search for the maximum of f on [lo, hi]. Endpoints are
// compared too, so maxima on the boundary are found exactly.
std::pair<double, double> golden_max(const std::function<double(double)>& f, double lo, double hi) {
  double a = lo, b = hi;
  double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > kBracket) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
    }
  }
  std::pair<double, double> best{(a + b) / 2, f((a + b) / 2)};
  for (double x : {lo, hi}) {
    const double fx = f(x);
    if (fx > best.second) best = {x, fx};
  }
  return best;
}

// Coordinate ascent on (theta1 in [0, pi], phase periodic) from a lattice
// optimum; each step only accepts improvements.
void refine(const std::function<double(double, double)>& f, double step_theta, double step_phase,
            double& theta, double& phase, double& value) {
  // at a pole the phase is meaningless; pick the one that pays best just inside
  if (theta < 0.5 * step_theta || theta > kPi - 0.5 * step_theta) {
    const double inner = theta < kPi / 2 ? step_theta / 4 : kPi - step_theta / 4;
    double best = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < 64; ++k) {
      const double y = kTwoPi * k / 64;
      const double v = f(inner, y);
      if (v > best) {
        best = v;
        phase = y;
      }
    }
  }
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double before = value;
    const auto t = golden_max([&](double x) { return f(x, phase); },
                              std::max(0.0, theta - step_theta), std::min(kPi, theta + step_theta));
    if (t.second > value) {
      theta = t.first;
      value = t.second;
    }
    const auto p = golden_max([&](double y) { return f(theta, y); }, phase - step_phase,
                              phase + step_phase);
    if (p.second > value) {
      phase = p.first;
      value = p.second;
    }
    if (value - before <= 1e-15) break;
  }
  // coordinate ascent crawls along curved ridges; finish with damped Newton
  constexpr double h = 1e-5;
  for (int it = 0; it < 50; ++it) {
    const double tc = std::clamp(theta, h, kPi - h);
    const double f0 = f(tc, phase);
    const double fxp = f(tc + h, phase), fxm = f(tc - h, phase);
    const double fyp = f(tc, phase + h), fym = f(tc, phase - h);
    const double gx = (fxp - fxm) / (2 * h), gy = (fyp - fym) / (2 * h);
    const double hxx = (fxp - 2 * f0 + fxm) / (h * h), hyy = (fyp - 2 * f0 + fym) / (h * h);
    const double hxy = (f(tc + h, phase + h) - f(tc + h, phase - h) - f(tc - h, phase + h) +
                        f(tc - h, phase - h)) /
                       (4 * h * h);
    const double det = hxx * hyy - hxy * hxy;
    double dx, dy;
    if (hxx < 0 && det > 0) {
      dx = -(hyy * gx - hxy * gy) / det;
      dy = -(hxx * gy - hxy * gx) / det;
    } else {
      dx = gx * step_theta;
      dy = gy * step_phase;
    }
    bool moved = false;
    for (double lam = 1.0; lam > 1e-6; lam *= 0.5) {
      const double t = std::clamp(theta + lam * dx, 0.0, kPi), y = phase + lam * dy;
      const double v = f(t, y);
      if (v > value) {
        moved = std::abs(t - theta) + std::abs(y - phase) > 1e-13;
        theta = t;
        phase = y;
        value = v;
        break;
      }
    }
    if (!moved) break;
  }
  phase = wrap_phase(phase);
}

}  // namespace

BestResponseResult best_response(const PayoffMatrix& a, const EntanglementAngle& ent,
                                 double opponent_theta1, double opponent_phase, int grid_n,
                                 std::optional<double> baseline, BestResponseMode mode,
                                 kernels::Backend backend) {
  if (grid_n < 16) throw UsageError("best_response needs grid_n >= 16");
  const double step_theta = kPi / (grid_n - 1);
  const double step_phase = kTwoPi / grid_n;
  BestResponseResult out;

  if (mode == BestResponseMode::Reduced) {
    const kernels::ReducedGame g(a, ent);
    const auto cell = kernels::best_response_grid(g, opponent_theta1, opponent_phase, grid_n, backend);
    double theta = kernels::theta_node(cell.i_theta, grid_n);
    double phase = kernels::phase_node(cell.i_phase, grid_n);
    double value = cell.payoff;
    refine([&](double t, double ph) { return g.alice(t, opponent_theta1, ph + opponent_phase); },
           step_theta, step_phase, theta, phase, value);
    out.best_payoff = value;
    out.theta1 = theta;
    out.phase = phase;
  } else {
    const EulerAngles opp{opponent_theta1, wrap_phase(opponent_phase), 0.0};
    const auto diag = a.alice_diag();
    auto payoff = [&](double t1, double t2, double t3) {
      const EulerAngles own{std::clamp(t1, 0.0, kPi), wrap_phase(t2), wrap_phase(t3)};
      return expectation_payoff(build_joint_state(own, opp, ent), diag);
    };
    double best = -std::numeric_limits<double>::infinity();
    double theta = 0.0, phase = 0.0, t3 = 0.0;
    for (int i = 0; i < grid_n; ++i) {
      for (int k = 0; k < grid_n; ++k) {
        for (int m = 0; m < 4; ++m) {
          const double v = payoff(kernels::theta_node(i, grid_n), kernels::phase_node(k, grid_n),
                                  m * kPi / 2);
          if (v > best) {
            best = v;
            theta = kernels::theta_node(i, grid_n);
            phase = kernels::phase_node(k, grid_n);
            t3 = m * kPi / 2;
          }
        }
      }
    }
    refine([&](double t, double ph) { return payoff(t, ph, t3); }, step_theta, step_phase, theta,
           phase, best);
    out.best_payoff = best;
    out.theta1 = theta;
    out.phase = phase;
  }
  if (baseline) out.improvement_over = out.best_payoff - *baseline;
  return out;
}

VerifyDetail verify_qne_detail(const PayoffMatrix& a, const EntanglementAngle& ent,
                               const StrategyProfile& p, double eps, int grid_n) {
  if (!(eps > 0.0)) throw UsageError("verify_qne_numeric needs eps > 0");
  const double alpha2 = p.resolved_alpha2.value_or(p.phi / 2);
  const double beta2 = p.resolved_beta2.value_or(p.phi / 2);
  const double pa = closed_form_payoff(a, p.alpha1, p.beta1, p.phi, ent).total;
  const double pb = closed_form_payoff_bob(a, p.alpha1, p.beta1, p.phi, ent).total;
  VerifyDetail d;
  // Bob's payoff is Alice's with the roles swapped, so his best reply uses
  // the same search against Alice's angles.
  d.improvement_a = best_response(a, ent, p.beta1, beta2, grid_n, pa).improvement_over;
  d.improvement_b = best_response(a, ent, p.alpha1, alpha2, grid_n, pb).improvement_over;
  d.ok = d.improvement_a <= eps && d.improvement_b <= eps;
  return d;
}

bool verify_qne_numeric(const PayoffMatrix& a, const EntanglementAngle& ent,
                        const StrategyProfile& p, double eps, int grid_n) {
  return verify_qne_detail(a, ent, p, eps, grid_n).ok;
}

std::vector<StrategyProfile> brute_force_qne_scan(const PayoffMatrix& a, const EntanglementAngle& ent,
                                                  int grid_n, kernels::Backend backend) {
  if (grid_n < 16) throw UsageError("brute_force_qne_scan needs grid_n >= 16");
  const kernels::ReducedGame g(a, ent);
  // A player's best attainable payoff depends on the opponent's theta1 only:
  // the own phase absorbs whatever the opponent contributes to phi.
  std::vector<double> best(static_cast<std::size_t>(grid_n));
  if (backend == kernels::Backend::Serial) {
    for (int k = 0; k < grid_n; ++k) {
      best[k] = best_response(a, ent, kernels::theta_node(k, grid_n), 0.0, grid_n).best_payoff;
    }
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = 0; k < grid_n; ++k) {
      best[k] = best_response(a, ent, kernels::theta_node(k, grid_n), 0.0, grid_n).best_payoff;
    }
  }
  const double eps = 10.0 / (static_cast<double>(grid_n) * grid_n);
  const auto hits = kernels::qne_scan(g, best, grid_n, eps, backend);
  std::vector<StrategyProfile> out;
  out.reserve(hits.size());
  for (const auto& h : hits) {
    out.push_back({kernels::theta_node(h.i_alpha, grid_n), kernels::theta_node(h.i_beta, grid_n),
                   kernels::phase_node(h.i_phi, grid_n), {}, {}});
  }
  return out;
}

double distance_to_set(const QNESet& set, const StrategyProfile& hit, int grid_n, double sin_gamma) {
  if (set.all_strategies) return 0.0;
  const double h_theta = kPi / (grid_n - 1);
  const double h_phase = kTwoPi / grid_n;
  const double w = std::abs(sin_gamma * std::sin(hit.alpha1) * std::sin(hit.beta1));
  double best = std::numeric_limits<double>::infinity();
  for (const auto& sol : set.solutions) {
    double d_ab = 0.0, phi_ref = sol.profile.phi;
    if (sol.curve) {
      d_ab = sol.curve->distance(hit.alpha1, hit.beta1) / h_theta;
      phi_ref = sol.curve->phi;
    } else {
      d_ab = std::max(std::abs(hit.alpha1 - sol.profile.alpha1),
                      std::abs(hit.beta1 - sol.profile.beta1)) / h_theta;
    }
    const double d_phi = sol.phi_unconstrained ? 0.0 : w * circular_gap(hit.phi, phi_ref) / h_phase;
    best = std::min(best, std::max(d_ab, d_phi));
  }
  return best;
}

AuditReport completeness_audit(const PayoffMatrix& a, const EntanglementAngle& ent, int grid_n,
                               double allowed_steps, kernels::Backend backend) {
  AuditReport rep;
  rep.grid_n = grid_n;
  const auto set = enumerate_qne(a, ent);
  const auto hits = brute_force_qne_scan(a, ent, grid_n, backend);
  rep.hits = hits.size();
  for (const auto& h : hits) {
    const double d = distance_to_set(set, h, grid_n, ent.sin_gamma());
    rep.max_distance_steps = std::max(rep.max_distance_steps, d);
    // slack for node rounding
    if (d > allowed_steps + 1e-9) rep.uncovered.push_back(h);
  }
  return rep;
}

ClassicalMixedNE classical_mixed_ne(const PayoffMatrix& a) {
  const auto c = coefficients(a);
  ClassicalMixedNE out;
  if (c.a33_zero()) return out;
  if (std::abs(*c.s) > 1.0 + tol::kAlgebraic) {
    out.status = ClassicalMixedNE::Status::NoInterior;
    return out;
  }
  out.status = ClassicalMixedNE::Status::Exists;
  out.x = std::clamp((1.0 - *c.s) / 2.0, 0.0, 1.0);
  out.payoff = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / (4.0 * c.a33);
  return out;
}

}  // namespace qgame
