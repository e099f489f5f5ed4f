// Copyright 2026 The zzcode Authors
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

#include <random>

#include <benchmark/benchmark.h>

#include "zzcode/capacity.hpp"
#include "zzcode/codes.hpp"
#include "zzcode/experiment.hpp"
#include "zzcode/pipeline.hpp"
#include "zzcode/table.hpp"

namespace zzcode {
namespace {

PauliString random_string(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::string s(static_cast<std::size_t>(n), 'I');
  for (char& c : s) c = "IXYZ"[pick(rng)];
  return PauliString(s);
}

void BM_PauliProduct(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  const PauliString a = random_string(n, rng);
  const PauliString b = random_string(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PauliProduct)->Arg(3)->Arg(6)->Arg(10);

void BM_ToDense(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int n = static_cast<int>(state.range(0));
  OperatorSum op(n);
  for (int k = 0; k < 16; ++k) op.add(random_string(n, rng), 0.1 * k);
  for (auto _ : state) benchmark::DoNotOptimize(to_dense(op));
}
BENCHMARK(BM_ToDense)->Arg(3)->Arg(6);

void BM_Pipeline(benchmark::State& state) {
  const CodeSpec code = build_code(static_cast<CodeId>(state.range(0)));
  const auto nd = static_cast<int>(code.data_spins.size());
  const auto na = static_cast<int>(code.ancilla_spins.size());
  const StateVector psi = StateVector::Unit(dimension_for(nd), 0);
  const DenseMatrix err = coherent_error(code.declared_errors.back(), 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(code, psi, ancilla_ground(na), err));
  state.SetLabel(std::string(code_name(static_cast<CodeId>(state.range(0)))));
}
BENCHMARK(BM_Pipeline)->DenseRange(0, 4);

void BM_TableVerification(benchmark::State& state) {
  const std::vector<TableRow> rows = load_table_fixture(default_data_dir() / "table_fixture.txt");
  for (auto _ : state) benchmark::DoNotOptimize(verify_table(rows, {0.0, 0.4488, 1.5708, 3.1416}));
}
BENCHMARK(BM_TableVerification)->Unit(benchmark::kMillisecond);

void BM_ErrorEnumeration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_zz_errors(10, kAllOrders));
}
BENCHMARK(BM_ErrorEnumeration);

void BM_Experiment2D(benchmark::State& state) {
  const SpinSystem sys = load_alanine();
  ExperimentConfig cfg;
  cfg.corrected = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_2d_experiment(sys, cfg));
}
BENCHMARK(BM_Experiment2D)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace zzcode

BENCHMARK_MAIN();
