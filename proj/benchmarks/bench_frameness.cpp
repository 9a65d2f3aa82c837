/*
Copyright (c) 2026 The frameness authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <memory>

#include <benchmark/benchmark.h>

#include "frameness/asymptotics.hpp"
#include "frameness/channel_calculus.hpp"
#include "frameness/entanglement_bound.hpp"
#include "frameness/estimation.hpp"
#include "frameness/frameness.hpp"
#include "frameness/random.hpp"

namespace frameness {
namespace {

void BM_Su2Twirl(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Twirl t = Twirl::su2(n);
  Rng rng(1);
  const DensityOperator rho = random_density(t.dim(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(t.apply(rho.matrix()));
}
BENCHMARK(BM_Su2Twirl)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_CollectiveSpinBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(CollectiveSpinRep::build(n));
}
BENCHMARK(BM_CollectiveSpinBuild)->Arg(4)->Arg(8)->Arg(10);

void BM_GAsymmetryFinite(benchmark::State& state) {
  const Twirl t = Twirl::finite(tensor_power_rep(dihedral_group(4), static_cast<std::size_t>(state.range(0))));
  Rng rng(2);
  const DensityOperator rho = random_density(t.dim(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(g_asymmetry(t, rho).asymmetry);
}
BENCHMARK(BM_GAsymmetryFinite)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void BM_Convolution(benchmark::State& state) {
  const auto copies = static_cast<std::size_t>(state.range(0));
  const ProbabilityDistribution p = ProbabilityDistribution::bernoulli(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(u1_ncopy_asymmetry(p, copies));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Convolution)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_TwoQubitOptimizer(benchmark::State& state) {
  const BipartiteState rho = bell_diagonal_state(0.75);
  TwoQubitOptimizerOptions options;
  options.grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(optimize_two_qubit_bound(rho, options).upper);
}
BENCHMARK(BM_TwoQubitOptimizer)->Arg(16)->Arg(64);

void BM_ImageDistance(benchmark::State& state) {
  Rng rng(3);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const KrausChannel ch = random_unital_idempotent_channel(dim, ChannelFamily::ConditionalExpectation, rng);
  const DensityOperator rho = random_density(dim, rng);
  for (auto _ : state) benchmark::DoNotOptimize(image_distance(ch, rho));
}
BENCHMARK(BM_ImageDistance)->Arg(4)->Arg(8);

void BM_SquareRootMeasurement(benchmark::State& state) {
  const FiniteGroupRep rep = tensor_power_rep(quaternion_group(), 2);
  Rng rng(4);
  const OrbitEnsemble ens = orbit_ensemble(rep, random_density(rep.dim(), rng));
  for (auto _ : state) benchmark::DoNotOptimize(mutual_information(ens, square_root_measurement(ens)));
}
BENCHMARK(BM_SquareRootMeasurement);

}  // namespace
}  // namespace frameness

BENCHMARK_MAIN();
