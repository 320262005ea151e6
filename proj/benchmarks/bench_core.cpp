// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <transasym/oracle.hpp>
#include <transasym/outer_series.hpp>

using namespace transasym;

namespace {

void BM_BigComplexMultiply(benchmark::State& state) {
  long prec = state.range(0);
  BigComplex a(BigReal(1.25, prec), BigReal(-0.75, prec));
  BigComplex b(BigReal(0.5, prec), BigReal(2.0, prec));
  for (auto _ : state) {
    benchmark::DoNotOptimize(a = a * b + b);
  }
}
BENCHMARK(BM_BigComplexMultiply)->Arg(64)->Arg(256)->Arg(1024);

void BM_KummerSeries(benchmark::State& state) {
  long prec = 256;
  PrecisionConfig cfg(prec);
  BigComplex a(BigReal(0L, prec), BigReal(-0.125, prec));
  BigComplex b(BigReal(0.5, prec), BigReal(0L, prec));
  BigComplex z(BigReal(-static_cast<double>(state.range(0)), prec),
               BigReal(3.0, prec));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kummer_m(a, b, z, cfg));
  }
}
BENCHMARK(BM_KummerSeries)->Arg(4)->Arg(16)->Arg(25);

void BM_InnerRecurrence(benchmark::State& state) {
  BigReal mu(1L, 256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_inner_coeffs(mu, state.range(0)));
  }
}
BENCHMARK(BM_InnerRecurrence)->Arg(100)->Arg(400);

void BM_CoeffTable(benchmark::State& state) {
  BigReal mu(1L, 256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_coeff_table(mu, state.range(0), 2 * state.range(0)));
  }
}
BENCHMARK(BM_CoeffTable)->Arg(4)->Arg(8);

void BM_OuterSeries(benchmark::State& state) {
  BigReal mu(1L, 256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_outer_series(mu, state.range(0)));
  }
}
BENCHMARK(BM_OuterSeries)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
