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

#include "qgame/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

namespace qgame::kernels {

namespace {

struct Trig {
  std::vector<double> c;
  std::vector<double> s;
};

Trig theta_table(int n) {
  Trig t;
  t.c.resize(static_cast<std::size_t>(n));
  t.s.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double x = theta_node(k, n);
    t.c[k] = std::cos(x);
    t.s[k] = std::sin(x);
  }
  return t;
}

std::vector<double> phase_cos_table(int n) {
  std::vector<double> c(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) c[k] = std::cos(phase_node(k, n));
  return c;
}

inline double payoff(const ReducedGame& g, double ca, double sa, double cb, double sb, double cphi) {
  return payoff_fast(g.c, ca, sa, cb, sb, cphi, g.cos_gamma, g.sin_gamma);
}

// Larger payoff wins; equal payoffs go to the smaller linear index.
inline bool better(double p, long idx, double best_p, long best_idx) {
  return p > best_p || (p == best_p && idx < best_idx);
}

void check_n(int n) {
  if (n < 2) throw UsageError("lattice needs at least 2 nodes per axis");
}

}  // namespace

double ReducedGame::alice(double alpha1, double beta1, double phi) const {
  return payoff(*this, std::cos(alpha1), std::sin(alpha1), std::cos(beta1), std::sin(beta1),
                std::cos(phi));
}

int max_threads() { return omp_get_max_threads(); }

GridArgmax best_response_grid(const ReducedGame& g, double opponent_theta1, double opponent_phase,
                              int n, Backend backend) {
  check_n(n);
  const Trig th = theta_table(n);
  std::vector<double> cphi(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) cphi[k] = std::cos(phase_node(k, n) + opponent_phase);
  const double cb = std::cos(opponent_theta1), sb = std::sin(opponent_theta1);
  const long total = static_cast<long>(n) * n;

  double best_p = -HUGE_VAL;
  long best_idx = total;
  if (backend == Backend::Serial) {
    for (long idx = 0; idx < total; ++idx) {
      const int i = static_cast<int>(idx / n), k = static_cast<int>(idx % n);
      const double p = payoff(g, th.c[i], th.s[i], cb, sb, cphi[k]);
      if (better(p, idx, best_p, best_idx)) {
        best_p = p;
        best_idx = idx;
      }
    }
  } else {
#pragma omp parallel
    {
      double local_p = -HUGE_VAL;
      long local_idx = total;
#pragma omp for schedule(static) nowait
      for (long idx = 0; idx < total; ++idx) {
        const int i = static_cast<int>(idx / n), k = static_cast<int>(idx % n);
        const double p = payoff(g, th.c[i], th.s[i], cb, sb, cphi[k]);
        if (better(p, idx, local_p, local_idx)) {
          local_p = p;
          local_idx = idx;
        }
      }
#pragma omp critical(qgame_best_response_grid)
      if (better(local_p, local_idx, best_p, best_idx)) {
        best_p = local_p;
        best_idx = local_idx;
      }
    }
  }
  return {best_p, static_cast<int>(best_idx / n), static_cast<int>(best_idx % n)};
}

std::vector<ScanHit> qne_scan(const ReducedGame& g, const std::vector<double>& best_by_theta,
                              int n, double eps, Backend backend) {
  check_n(n);
  if (static_cast<int>(best_by_theta.size()) != n) {
    throw UsageError("best_by_theta must have one entry per theta node");
  }
  const Trig th = theta_table(n);
  const std::vector<double> cphi = phase_cos_table(n);

  auto visit_row = [&](int ia, std::vector<ScanHit>& out) {
    for (int ib = 0; ib < n; ++ib) {
      for (int kp = 0; kp < n; ++kp) {
        const double ga = best_by_theta[ib] - payoff(g, th.c[ia], th.s[ia], th.c[ib], th.s[ib], cphi[kp]);
        if (ga > eps) continue;
        const double gb = best_by_theta[ia] - payoff(g, th.c[ib], th.s[ib], th.c[ia], th.s[ia], cphi[kp]);
        if (gb > eps) continue;
        const std::int64_t idx = (static_cast<std::int64_t>(ia) * n + ib) * n + kp;
        out.push_back({idx, ia, ib, kp, ga, gb});
      }
    }
  };

  std::vector<ScanHit> hits;
  if (backend == Backend::Serial) {
    for (int ia = 0; ia < n; ++ia) visit_row(ia, hits);
    return hits;
  }
#pragma omp parallel
  {
    std::vector<ScanHit> local;
#pragma omp for schedule(dynamic, 1) nowait
    for (int ia = 0; ia < n; ++ia) visit_row(ia, local);
#pragma omp critical(qgame_qne_scan)
    hits.insert(hits.end(), local.begin(), local.end());
  }
  std::sort(hits.begin(), hits.end(),
            [](const ScanHit& x, const ScanHit& y) { return x.index < y.index; });
  return hits;
}

bool pareto_improvable(const ReducedGame& g, double base_a, double base_b, int n, double tol,
                       Backend backend) {
  check_n(n);
  const Trig th = theta_table(n);
  const std::vector<double> cphi = phase_cos_table(n);

  auto row_improves = [&](int ia) {
    for (int ib = 0; ib < n; ++ib) {
      for (int kp = 0; kp < n; ++kp) {
        const double pa = payoff(g, th.c[ia], th.s[ia], th.c[ib], th.s[ib], cphi[kp]);
        if (!(pa > base_a + tol)) continue;
        const double pb = payoff(g, th.c[ib], th.s[ib], th.c[ia], th.s[ia], cphi[kp]);
        if (pb > base_b + tol) return true;
      }
    }
    return false;
  };

  if (backend == Backend::Serial) {
    for (int ia = 0; ia < n; ++ia) {
      if (row_improves(ia)) return true;
    }
    return false;
  }
  bool found = false;
#pragma omp parallel for schedule(dynamic, 1) reduction(|| : found)
  for (int ia = 0; ia < n; ++ia) {
    if (!found) found = row_improves(ia);
  }
  return found;
}

}  // namespace qgame::kernels
