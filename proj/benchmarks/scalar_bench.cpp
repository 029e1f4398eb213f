#include <benchmark/benchmark.h>

#include "heckespheres/qseries.hpp"

using namespace hsp;

namespace {

// representative rational functions with nontrivial gcd structure
Scalar numeratorHeavy(int k) {
  Scalar out(1);
  for (int i = 1; i <= k; ++i)
    out *= Scalar(1) - Scalar::p() * Scalar::qPow2(2 * i);
  return out;
}

void BM_ScalarAddWithGcd(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Scalar a = numeratorHeavy(k) / qPochhammer(Scalar::q(), k);
  const Scalar b = qPochhammer(-Scalar::p(), k) / numeratorHeavy(k);
  for (auto _ : state) benchmark::DoNotOptimize(a + b);
}

void BM_ScalarMul(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Scalar a = numeratorHeavy(k) / qPochhammer(Scalar::q(), k);
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}

void BM_QKrawtchouk(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(qKrawtchouk(QKrawParams{N / 2, N / 2, Scalar::p(), N}));
}

void BM_DifferenceEquation(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(checkDifferenceEquation(QKrawParams{N / 2, N / 2, Scalar::p(), N}));
}

}  // namespace

BENCHMARK(BM_ScalarAddWithGcd)->Arg(4)->Arg(8);
BENCHMARK(BM_ScalarMul)->Arg(4)->Arg(8);
BENCHMARK(BM_QKrawtchouk)->Arg(4)->Arg(8);
BENCHMARK(BM_DifferenceEquation)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
