// Normal-form and cohomology benchmarks on seeded random inputs.
#include <benchmark/benchmark.h>

#include "crys/catalog.hpp"

#include <random>

using namespace crys;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, long lo = -9, long hi = 9) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix A(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A.at(i, j) = d(rng);
  return A;
}

void BM_hermite(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = int(state.range(0));
  auto A = random_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(A));
}
BENCHMARK(BM_hermite)->Arg(8)->Arg(16)->Arg(32);

void BM_smith(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int n = int(state.range(0));
  auto A = random_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(A));
}
BENCHMARK(BM_smith)->Arg(8)->Arg(16)->Arg(32);

void BM_integer_kernel(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int n = int(state.range(0));
  auto A = random_matrix(rng, n, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(integer_kernel(A));
}
BENCHMARK(BM_integer_kernel)->Arg(8)->Arg(16);

void BM_h1_group_ring(benchmark::State& state) {
  const long p = state.range(0);
  auto L = std::make_shared<GLattice>(regular_lattice(PGroup::cyclic(p, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(h1(L));
}
BENCHMARK(BM_h1_group_ring)->Arg(2)->Arg(3)->Arg(5);

void BM_endomorphism_ring(benchmark::State& state) {
  const long p = state.range(0);
  auto entry = xi_module(p, 0);
  for (auto _ : state) benchmark::DoNotOptimize(endomorphism_ring(*entry.lattice));
}
BENCHMARK(BM_endomorphism_ring)->Arg(2)->Arg(3);

void BM_torsion_certificate(benchmark::State& state) {
  const long p = state.range(0);
  auto T = xi_module(p, 0).canonical_cocycles.front().second;
  for (auto _ : state) {
    CrysGroup C(T);
    benchmark::DoNotOptimize(is_torsion_free(C));
  }
}
BENCHMARK(BM_torsion_certificate)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
