#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "matforms/expand_gl.hpp"
#include "matforms/oracle.hpp"
#include "matforms/parser.hpp"

namespace {

using namespace matforms;

// Amitsur expansion of sigma_t(x1 + x2 + x3) from the parsed expression.
void BM_NormalizeAmitsur(benchmark::State& state) {
  const std::string src = "s[" + std::to_string(state.range(0)) + "](x1 + x2 + x3)";
  const MixedExpr e = lower(parse(src), CoeffRing::integers());
  for (auto _ : state) benchmark::DoNotOptimize(normalize(e));
}
BENCHMARK(BM_NormalizeAmitsur)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_PowerFormula(benchmark::State& state) {
  const auto t = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(power_formula(t, 3, CoeffRing::integers()));
}
BENCHMARK(BM_PowerFormula)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_PartialLinearization(benchmark::State& state) {
  const DegreeVector tv(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(partial_linearization(norm(tv), tv, CoeffRing::rationals()));
}
BENCHMARK(BM_PartialLinearization)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CharCoeffs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
  for (auto& row : m)
    for (auto& v : row) v = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(char_coeffs(m));
}
BENCHMARK(BM_CharCoeffs)->RangeMultiplier(2)->Range(2, 16);

// Cayley-Hamilton at size n, once symbolically and once by sampling.
void verify_chi(benchmark::State& state, VerifyMode mode) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const MixedExpr e = lower(parse("chi[" + std::to_string(n) + "](x1 + x2)"), CoeffRing::integers());
  VerifyOptions o;
  o.n = n;
  o.mode = mode;
  for (auto _ : state) {
    const Verdict v = is_identity(e, o);
    if (!v.identity) state.SkipWithError("Cayley-Hamilton reported as a non-identity");
    benchmark::DoNotOptimize(v);
  }
}

void BM_VerifyExact(benchmark::State& state) { verify_chi(state, VerifyMode::Exact); }
BENCHMARK(BM_VerifyExact)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_VerifyRandomized(benchmark::State& state) { verify_chi(state, VerifyMode::Randomized); }
BENCHMARK(BM_VerifyRandomized)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
