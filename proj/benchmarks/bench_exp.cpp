// Copyright 2026 The so4exp Authors
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

#include <vector>

#include "so4exp/so4exp.hpp"

namespace {

using so4exp::SkewSo3;
using so4exp::SkewSo4;

constexpr std::size_t kPool = 256;

std::vector<SkewSo4> so4_pool() {
  so4exp::Xorshift64Star rng(7);
  std::vector<SkewSo4> out(kPool);
  for (auto& a : out) {
    a = {rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5),
         rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
  }
  return out;
}

std::vector<SkewSo3> so3_pool() {
  so4exp::Xorshift64Star rng(11);
  std::vector<SkewSo3> out(kPool);
  for (auto& b : out) b = {rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
  return out;
}

void BM_ExpClosed(benchmark::State& state) {
  const auto pool = so4_pool();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(so4exp::exp_so4_closed(pool[i++ % kPool]));
}
BENCHMARK(BM_ExpClosed);

void BM_ExpViaKron(benchmark::State& state) {
  const auto pool = so4_pool();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(so4exp::exp_so4_via_kron(pool[i++ % kPool]));
}
BENCHMARK(BM_ExpViaKron);

void BM_ExpSeries(benchmark::State& state) {
  const auto pool = so4_pool();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(so4exp::oracle::taylor_exp(pool[i++ % kPool].matrix()));
  }
}
BENCHMARK(BM_ExpSeries);

void BM_ExpSo3Embedded(benchmark::State& state) {
  const auto pool = so3_pool();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(so4exp::exp_so3(pool[i++ % kPool]));
}
BENCHMARK(BM_ExpSo3Embedded);

void BM_Rodrigues(benchmark::State& state) {
  const auto pool = so3_pool();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(so4exp::oracle::rodrigues_so3(pool[i++ % kPool]));
}
BENCHMARK(BM_Rodrigues);

void BM_FactorLocalGate(benchmark::State& state) {
  const auto pool = so4_pool();
  std::vector<so4exp::CMat4> gates;
  gates.reserve(kPool);
  const auto& r = so4exp::magic_matrix();
  for (const auto& a : pool) {
    gates.push_back(r * so4exp::to_complex(so4exp::exp_so4_closed(a)) * so4exp::adjoint(r));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(so4exp::factor_local_gate(gates[i++ % kPool]));
}
BENCHMARK(BM_FactorLocalGate);

void BM_LogSo4(benchmark::State& state) {
  const auto pool = so4_pool();
  std::vector<so4exp::RMat4> rotations;
  rotations.reserve(kPool);
  for (const auto& a : pool) rotations.push_back(so4exp::exp_so4_closed(a));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(so4exp::log_so4(rotations[i++ % kPool]));
}
BENCHMARK(BM_LogSo4);

}  // namespace

BENCHMARK_MAIN();
