#include <benchmark/benchmark.h>

#include "hodgecc/verify.hpp"

using namespace hodgecc;

namespace {

void BM_ToddClass(benchmark::State &state) {
  std::vector<int> factors;
  if (state.range(0) == 0)
    factors = {3};
  else
    factors = {1, 2};
  const VarietyModel X = multiprojective(factors);
  for (auto _ : state) {
    auto td = todd_class(X);
    benchmark::DoNotOptimize(td);
  }
}
BENCHMARK(BM_ToddClass)->Arg(0)->Arg(1);

void BM_HrrCheck(benchmark::State &state) {
  const VarietyModel X = multiprojective({1, 2});
  for (auto _ : state) {
    auto r = hrr_check(X, {{static_cast<long>(state.range(0)), -2}});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_HrrCheck)->Arg(1)->Arg(4);

void BM_EquivariantHrr(benchmark::State &state) {
  const std::vector<std::pair<Scalar, long>> blocks{
      {Scalar(1), 2}, {Scalar(2), 1}, {Scalar(3), 1}};
  for (auto _ : state) {
    auto r = equivariant_hrr_check(3, blocks, state.range(0));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_EquivariantHrr)->Arg(1)->Arg(3);

void BM_DexpIdentity(benchmark::State &state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto residual = dexp_identity_check(N);
    benchmark::DoNotOptimize(residual);
  }
}
BENCHMARK(BM_DexpIdentity)->Arg(4)->Arg(6);

void BM_MatrixDexp(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  NilpotentMatrix X{n, std::vector<std::vector<Rational>>(
                           n, std::vector<Rational>(n, Rational(0)))};
  NilpotentMatrix Y = X;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      X.entries[i][j] = Rational((i + j) % 3 - 1);
      Y.entries[i][j] = Rational((i * j) % 5 - 2, 2);
    }
  for (auto _ : state) {
    bool ok = matrix_dexp_check(X, Y);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_MatrixDexp)->Arg(3)->Arg(5);

} // namespace

BENCHMARK_MAIN();
