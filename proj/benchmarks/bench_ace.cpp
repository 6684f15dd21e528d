// Copyright 2026 The qace authors
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

#include "qace/ace.hpp"
#include "qace/linalg.hpp"
#include "qace/sampling.hpp"
#include "qace/states.hpp"

namespace {

qace::AveragingConfig quad(int phi, int theta) {
  qace::AveragingConfig cfg;
  cfg.phi_nodes = phi;
  cfg.theta_nodes = theta;
  return cfg;
}

void BM_TraceDistance4(benchmark::State& state) {
  qace::SeededRng rng(1);
  const qace::DensityOp a = qace::ginibre_mixed_two_qubit(rng);
  const qace::DensityOp b = qace::ginibre_mixed_two_qubit(rng);
  for (auto _ : state) benchmark::DoNotOptimize(qace::trace_distance(a, b));
}
BENCHMARK(BM_TraceDistance4);

void BM_JacobiEigensystem8(benchmark::State& state) {
  qace::SeededRng rng(2);
  qace::ComplexMatrix g(8, 8);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) g(r, c) = qace::Complex(rng.gaussian(), rng.gaussian());
  qace::ComplexMatrix h = g;
  h += g.adjoint();
  h *= qace::Complex(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(qace::hermitian_eigensystem(h));
}
BENCHMARK(BM_JacobiEigensystem8);

void BM_Concurrence(benchmark::State& state) {
  qace::SeededRng rng(3);
  const qace::DensityOp rho = qace::ginibre_mixed_two_qubit(rng);
  for (auto _ : state) benchmark::DoNotOptimize(qace::concurrence(rho));
}
BENCHMARK(BM_Concurrence);

void BM_AceGateQuadrature(benchmark::State& state) {
  const qace::GateSpec gate = qace::standard_gate("B");
  const qace::AveragingConfig cfg =
      quad(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(qace::ace_gate(gate, cfg));
}
BENCHMARK(BM_AceGateQuadrature)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_AceGateMonteCarlo(benchmark::State& state) {
  const qace::GateSpec gate = qace::standard_gate("B");
  qace::AveragingConfig cfg;
  cfg.method = qace::AveragingMethod::kMonteCarlo;
  cfg.mc_samples = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(qace::ace_gate(gate, cfg));
}
BENCHMARK(BM_AceGateMonteCarlo)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_AceMbqc(benchmark::State& state) {
  qace::SeededRng rng(4);
  const qace::DensityOp rho = qace::ginibre_mixed_two_qubit(rng);
  const qace::AveragingConfig cfg = quad(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(qace::ace_mbqc(rho, cfg));
}
BENCHMARK(BM_AceMbqc)->Arg(64)->Arg(1024)->Arg(8192);

void BM_AceTeleport(benchmark::State& state) {
  qace::SeededRng rng(5);
  const qace::DensityOp rho = qace::ginibre_mixed_two_qubit(rng);
  const qace::AveragingConfig cfg =
      quad(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(qace::ace_teleport(rho, cfg));
}
BENCHMARK(BM_AceTeleport)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
