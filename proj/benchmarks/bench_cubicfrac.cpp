#include <benchmark/benchmark.h>

#include "cubicfrac/bcf.hpp"
#include "cubicfrac/jacobi.hpp"
#include "cubicfrac/periodic.hpp"
#include "cubicfrac/redei.hpp"

using namespace cubicfrac;

namespace {

void BM_JacobiCubicPair(benchmark::State& state) {
  const Radicand d(4);
  const CubicNumber x = CubicNumber::cbrt_squared(d);
  const CubicNumber y = CubicNumber::cbrt(d);
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_expand(x, y, steps));
}
BENCHMARK(BM_JacobiCubicPair)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond);

void BM_JacobiRational(benchmark::State& state) {
  const Rational x = Rational::parse("918273645/12345678");
  const Rational y = Rational::parse("-55443322/7654321");
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_expand(x, y, 200));
}
BENCHMARK(BM_JacobiRational);

void BM_TheoremConvergents(benchmark::State& state) {
  const Bcf f = build_theorem_bcf(5, 2).fraction;
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(convergents(f, n));
}
BENCHMARK(BM_TheoremConvergents)->RangeMultiplier(2)->Range(16, 512);

void BM_MatrixProduct(benchmark::State& state) {
  const Bcf f = build_theorem_bcf(7, 3).fraction;
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(matrix_product(f, n));
}
BENCHMARK(BM_MatrixProduct)->RangeMultiplier(4)->Range(16, 256);

void BM_MuSum(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mu_coords(3, 5, 2, n));
}
BENCHMARK(BM_MuSum)->RangeMultiplier(4)->Range(16, 1024);

void BM_MuMatrix(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mu_matrix(3, 5, 2, n));
}
BENCHMARK(BM_MuMatrix)->RangeMultiplier(4)->Range(16, 1024);

void BM_VerifyMuConvergents(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_mu_convergents(10, 3, 30));
}
BENCHMARK(BM_VerifyMuConvergents)->Unit(benchmark::kMillisecond);

void BM_RedeiPermutes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(redei_permutes(10007, 5, 97));
}
BENCHMARK(BM_RedeiPermutes)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
