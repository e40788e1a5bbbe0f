#include <benchmark/benchmark.h>

#include "cuspcount/census.hpp"
#include "cuspcount/classsum.hpp"
#include "cuspcount/finite_field.hpp"
#include "cuspcount/lefschetz.hpp"
#include "cuspcount/lfun.hpp"

using namespace cuspcount;

static void BM_ClassSumSL(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const CurveDatum c = projective_line(7, {1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(class_sum(GroupSpec::sl(n), c));
}
BENCHMARK(BM_ClassSumSL)->DenseRange(2, 6);

static void BM_ClassSumSp6(benchmark::State& state) {
  const CurveDatum c = projective_line(static_cast<std::uint64_t>(state.range(0)), {1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(class_sum(GroupSpec::sp(6), c));
}
BENCHMARK(BM_ClassSumSp6)->Arg(8)->Arg(9);

static void BM_SlPrimeCertificate(benchmark::State& state) {
  const auto r = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sl_prime_certificate(5, r));
}
BENCHMARK(BM_SlPrimeCertificate)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_SlScriptP(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sl_script_p(n, 2));
}
BENCHMARK(BM_SlScriptP)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SpCertificate(benchmark::State& state) {
  const auto r = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sp_certificate(3, Parity::Odd, r));
}
BENCHMARK(BM_SpCertificate)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_Sp6Census(benchmark::State& state) {
  const auto f = oracle::FiniteField::of_order(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::sp_census(3, f));
}
BENCHMARK(BM_Sp6Census)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_FNTransform(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const LefschetzFunction f = LefschetzFunction::chi(3) + LefschetzFunction::power(2L);
  for (auto _ : state) benchmark::DoNotOptimize(f_N_transform(f, n));
}
BENCHMARK(BM_FNTransform)->Arg(4)->Arg(12)->Arg(36);

static void BM_ZPolynomialElliptic(benchmark::State& state) {
  const CurveDatum c = elliptic_curve(3, 2, {1, 2}, {1});
  const ArtinTateMotive m = motive_of(GroupSpec::sp(4));
  for (auto _ : state) benchmark::DoNotOptimize(z_polynomial(m, c).evaluate_power(BigInt(3), 4));
}
BENCHMARK(BM_ZPolynomialElliptic)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
