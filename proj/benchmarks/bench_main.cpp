// Copyright 2026 The qchan Authors
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

#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "qchan/channels.hpp"
#include "qchan/divergences.hpp"
#include "qchan/estimator.hpp"
#include "qchan/lessnoisy.hpp"
#include "qchan/random_states.hpp"

namespace {

using namespace qchan;

void BM_RelEntropy(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  Rng rng = make_rng(1);
  const DensityMatrix rho = random_full_rank(d, rng, 0.01), sigma = random_full_rank(d, rng, 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(rel_entropy(rho, sigma));
}
BENCHMARK(BM_RelEntropy)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_BkmMetric(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  Rng rng = make_rng(2);
  const DensityMatrix sigma = random_full_rank(d, rng, 0.01);
  const ComplexMatrix x = random_full_rank(d, rng, 0.01).matrix() - sigma.matrix();
  for (auto _ : state) benchmark::DoNotOptimize(bkm_metric(sigma, x));
}
BENCHMARK(BM_BkmMetric)->Arg(2)->Arg(4)->Arg(8);

void BM_EstimateAmpDamp(benchmark::State& state) {
  const Channel n = make_amplitude_damping(0.5), m = make_amplitude_damping(0.25);
  OptimizerConfig cfg;
  cfg.restarts = static_cast<std::size_t>(state.range(0));
  cfg.mode = OptimizeMode::kMin;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_coefficient(n, m, cfg));
}
BENCHMARK(BM_EstimateAmpDamp)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SweepRegion(benchmark::State& state) {
  const std::vector<double> ps{0.6, 0.75, 0.9};
  const auto grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_region(grid, ps));
}
BENCHMARK(BM_SweepRegion)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
