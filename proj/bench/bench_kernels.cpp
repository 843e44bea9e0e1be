// Copyright 2026 The qftkron Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qftkron/kernels.hpp"

namespace k = qftkron::kernels;
using qftkron::cplx;

namespace {

std::vector<cplx> random_entries(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<cplx> v(count);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

template <bool Parallel>
void BM_ApplySite(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t dim = std::size_t{1} << n;
  auto psi = random_entries(dim, 1);
  const auto mat = random_entries(4, 2);
  const auto layout = k::SiteLayout::make(n, 2, n / 2);
  for (auto _ : state) {
    if constexpr (Parallel)
      k::omp::apply_site(psi, layout, mat);
    else
      k::serial::apply_site(psi, layout, mat);
    benchmark::DoNotOptimize(psi.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dim));
}

template <bool Parallel>
void BM_Matmul(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto a = random_entries(m * m, 3);
  const auto b = random_entries(m * m, 4);
  std::vector<cplx> out(m * m);
  for (auto _ : state) {
    if constexpr (Parallel)
      k::omp::matmul(a, b, out, m, m, m);
    else
      k::serial::matmul(a, b, out, m, m, m);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_Kron(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto a = random_entries(m * m, 5);
  const auto b = random_entries(m * m, 6);
  std::vector<cplx> out(m * m * m * m);
  for (auto _ : state) {
    if constexpr (Parallel)
      k::omp::kron(a, m, m, b, m, m, out);
    else
      k::serial::kron(a, m, m, b, m, m, out);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_ApplySite<false>)->Name("apply_site/serial")->DenseRange(10, 20, 5);
BENCHMARK(BM_ApplySite<true>)->Name("apply_site/omp")->DenseRange(10, 20, 5);
BENCHMARK(BM_Matmul<false>)->Name("matmul/serial")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_Matmul<true>)->Name("matmul/omp")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_Kron<false>)->Name("kron/serial")->RangeMultiplier(2)->Range(8, 32);
BENCHMARK(BM_Kron<true>)->Name("kron/omp")->RangeMultiplier(2)->Range(8, 32);

BENCHMARK_MAIN();
