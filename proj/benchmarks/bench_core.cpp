// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <benchmark/benchmark.h>

#include <cstdint>

#include "conicmod/conicmod.hpp"

namespace {

using namespace conicmod;

void BM_Kronecker(benchmark::State& state) {
  const auto range = state.range(0);
  for (auto _ : state) {
    int acc = 0;
    for (std::int64_t a = -range; a <= range; ++a) acc += kronecker(a, 1'000'003);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * (2 * range + 1));
}
BENCHMARK(BM_Kronecker)->Arg(1 << 10)->Arg(1 << 14);

void BM_CountFormula(benchmark::State& state) {
  const PrimeModulus p(static_cast<std::uint64_t>(state.range(0)));
  const Curve c(-3, p);
  for (auto _ : state) benchmark::DoNotOptimize(count_formula(c));
}
BENCHMARK(BM_CountFormula)->Arg(499)->Arg(1'000'000'007);

void BM_EnumerateSolutions(benchmark::State& state) {
  const Curve c(-3, PrimeModulus(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_solutions(c));
}
BENCHMARK(BM_EnumerateSolutions)->Arg(499)->Arg(9973);

void BM_ElementOrder(benchmark::State& state) {
  const Curve c(-3, PrimeModulus(static_cast<std::uint64_t>(state.range(0))));
  const Point g = find_generator(c);
  for (auto _ : state) benchmark::DoNotOptimize(element_order(g));
}
BENCHMARK(BM_ElementOrder)->Arg(97)->Arg(9973);

void BM_Fbar(benchmark::State& state) {
  const auto a = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(fbar(a));
}
BENCHMARK(BM_Fbar)->Arg(499)->Arg(-4999)->Arg(9998);

void BM_GaussSumQuadratic(benchmark::State& state) {
  const PrimeModulus p(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_sum_quadratic(p));
}
BENCHMARK(BM_GaussSumQuadratic)->Arg(499)->Arg(9973);

void BM_VerifyBijection(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_bijection(state.range(0)));
}
BENCHMARK(BM_VerifyBijection)->Arg(999)->Arg(9999);

}  // namespace

BENCHMARK_MAIN();
