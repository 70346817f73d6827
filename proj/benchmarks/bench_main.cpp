#include <benchmark/benchmark.h>

#include "btalg/classify.hpp"
#include "btalg/oracle.hpp"

namespace {

using namespace btalg;

void BM_CompatibleStructured(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int d = static_cast<int>(state.range(1));
  oracle::Rng rng(7);
  Poly p = rng.monic_poly(d);
  auto a = rng.toeplitz_pm(n, p);
  auto b = rng.toeplitz_pm(n, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compatible(a, b));
  }
}
BENCHMARK(BM_CompatibleStructured)->Args({4, 2})->Args({6, 4})->Args({8, 4});

void BM_DenseProductScan(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int d = static_cast<int>(state.range(1));
  oracle::Rng rng(7);
  Poly p = rng.monic_poly(d);
  auto a = oracle::realize_scalar(rng.toeplitz_pm(n, p));
  auto b = oracle::realize_scalar(rng.toeplitz_pm(n, p));
  for (auto _ : state) {
    Mat prod = oracle::dense_mul(a, b);
    benchmark::DoNotOptimize(oracle::dense_block_toeplitz(prod, n, d));
  }
}
BENCHMARK(BM_DenseProductScan)->Args({4, 2})->Args({6, 4})->Args({8, 4});

void BM_PolyGcd(benchmark::State& state) {
  int deg = static_cast<int>(state.range(0));
  oracle::Rng rng(11);
  Poly a = rng.monic_poly(deg);
  Poly b = rng.monic_poly(deg - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(poly_gcd(a, b));
  }
}
BENCHMARK(BM_PolyGcd)->Arg(4)->Arg(8)->Arg(16);

void BM_ClassifyRoundTrip(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  oracle::Rng rng(13);
  SinglyGenSpec spec = rng.singly_gen(4);
  auto gens = bsg_generators(spec, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_maximal(gens));
  }
}
BENCHMARK(BM_ClassifyRoundTrip)->Arg(2)->Arg(3)->Arg(4);

void BM_IsMaximal(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto strata = enumerate_xm(2, n);
  auto gens = bsg_generators(xm_stratum_spec(strata[0], 2), n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_maximal(gens));
  }
}
BENCHMARK(BM_IsMaximal)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
