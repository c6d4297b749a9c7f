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

// Serial reference vs OpenMP for each lattice kernel.
// Run: ./build/bench/bench_kernels --benchmark_filter=Scan

#include <benchmark/benchmark.h>

#include <vector>

#include "qgame/kernels.hpp"
#include "qgame/oracle.hpp"
#include "qgame/phase_analysis.hpp"

namespace {

using qgame::kernels::Backend;

const qgame::PayoffMatrix kChicken(3, 1, 4, 0);
const qgame::PayoffMatrix kStagHunt(5, 1, 4, 3);

Backend backend_of(const benchmark::State& st) {
  return st.range(1) == 0 ? Backend::Serial : Backend::OpenMP;
}

void BM_BestResponseGrid(benchmark::State& st) {
  const qgame::kernels::ReducedGame g(kChicken, qgame::EntanglementAngle(qgame::kPi / 3));
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) {
    benchmark::DoNotOptimize(qgame::kernels::best_response_grid(g, 1.1, 0.4, n, backend_of(st)));
  }
  st.counters["points"] = static_cast<double>(n) * n;
}
BENCHMARK(BM_BestResponseGrid)->ArgsProduct({{256, 1024}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_QneScan(benchmark::State& st) {
  const qgame::EntanglementAngle ent(qgame::kPi / 3);
  const qgame::kernels::ReducedGame g(kChicken, ent);
  const int n = static_cast<int>(st.range(0));
  std::vector<double> best(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    best[k] = qgame::best_response(kChicken, ent, qgame::kernels::theta_node(k, n), 0.0, 32).best_payoff;
  }
  for (auto _ : st) {
    benchmark::DoNotOptimize(qgame::kernels::qne_scan(g, best, n, 10.0 / (n * n), backend_of(st)));
  }
  st.counters["points"] = static_cast<double>(n) * n * n;
}
BENCHMARK(BM_QneScan)->ArgsProduct({{48, 128}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Pareto(benchmark::State& st) {
  // The Stag Hunt (0,0) corner is Pareto optimal, so the whole lattice is visited.
  const qgame::EntanglementAngle ent(0.0);
  const qgame::kernels::ReducedGame g(kStagHunt, ent);
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) {
    benchmark::DoNotOptimize(qgame::kernels::pareto_improvable(g, 5.0, 5.0, n, 1e-9, backend_of(st)));
  }
  st.counters["points"] = static_cast<double>(n) * n * n;
}
BENCHMARK(BM_Pareto)->ArgsProduct({{64, 160}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  std::vector<double> gammas;
  for (int k = 0; k < n; ++k) gammas.push_back(qgame::kPi * k / (n - 1));
  for (auto _ : st) {
    benchmark::DoNotOptimize(qgame::sweep(kStagHunt, gammas, false, backend_of(st)));
  }
}
BENCHMARK(BM_Sweep)->ArgsProduct({{1001}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
