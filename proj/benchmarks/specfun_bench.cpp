#include <benchmark/benchmark.h>

#include "bathlab/specfun.hpp"

namespace {

using bathlab::specfun::Complex;

void BM_Digamma(benchmark::State& state) {
  Complex z(0.37, 1.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bathlab::specfun::digamma(z));
  }
}
BENCHMARK(BM_Digamma);

void BM_Trigamma(benchmark::State& state) {
  Complex z(0.37, 1.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bathlab::specfun::trigamma(z));
  }
}
BENCHMARK(BM_Trigamma);

// Negative real part goes through reflection.
void BM_TrigammaReflected(benchmark::State& state) {
  Complex z(-3.4, 0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bathlab::specfun::trigamma(z));
  }
}
BENCHMARK(BM_TrigammaReflected);

void BM_LogGamma(benchmark::State& state) {
  Complex z(1.05, 0.8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bathlab::specfun::log_gamma(z));
  }
}
BENCHMARK(BM_LogGamma);

}  // namespace
