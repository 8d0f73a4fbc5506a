#include <benchmark/benchmark.h>

#include <random>

#include "famalg/casimir.hpp"
#include "famalg/family.hpp"
#include "famalg/independence.hpp"
#include "famalg/lie.hpp"

using namespace famalg;

static void BM_PolyMultiply(benchmark::State &state) {
  const int nvars = 15;
  std::mt19937_64 rng(1);
  auto random_poly = [&](int terms) {
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      for (int d = 0; d < 3; ++d) {
        const int v = int(rng() % nvars);
        m.set_exponent(v, m.exponent(v) + 1);
      }
      ts.push_back({m, Rational(std::int64_t(rng() % 7) + 1, 3)});
    }
    return Poly::from_terms(nvars, std::move(ts));
  };
  const Poly a = random_poly(int(state.range(0))), b = random_poly(int(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->Arg(16)->Arg(64)->Arg(256);

static void BM_FamilyMultiplyN4(benchmark::State &state) {
  const FamilyAlgebra A(4);
  const FamilyElement x = A.word("LS"), y = A.word("RR");
  for (auto _ : state)
    benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_FamilyMultiplyN4)->Unit(benchmark::kMillisecond);

static void BM_CasimirN5(benchmark::State &state) {
  const LieData lie = LieData::build(5);
  const FMatrix F = build_F(lie);
  const int k = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(casimir_c(F, k));
}
BENCHMARK(BM_CasimirN5)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_RankCertificateN4(benchmark::State &state) {
  const FamilyAlgebra A(4);
  const auto basis = monomial_basis(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(rank_certificate(A, basis, 1, 7));
}
BENCHMARK(BM_RankCertificateN4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
