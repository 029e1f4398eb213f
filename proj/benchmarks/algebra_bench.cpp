#include <benchmark/benchmark.h>

#include "heckespheres/spherical.hpp"

using namespace hsp;

namespace {

void BM_HeckeSymmetrize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const VElt v = VElt::basisVector(n, VBasis::V, (1u << n) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(symmetrize(v));
}

void BM_ModuleProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  VElt a(n, VBasis::U), b(n, VBasis::U);
  for (std::uint32_t x = 0; x < a.dim(); ++x) {
    a.coord(x) = Scalar(1);
    b.coord(x) = x % 2 ? Scalar::q() : Scalar(1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(product(a, b));
}

void BM_SphericalTableRecurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phiViaRecurrence(n));
}

void BM_CommutantDims(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(checkCommutant(n, n));
}

}  // namespace

BENCHMARK(BM_HeckeSymmetrize)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ModuleProduct)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SphericalTableRecurrence)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CommutantDims)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
