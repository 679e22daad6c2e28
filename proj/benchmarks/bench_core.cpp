#include <benchmark/benchmark.h>

#include <random>

#include "hermitian.hpp"
#include "loghat/classify.hpp"
#include "loghat/factor.hpp"
#include "loghat/motive.hpp"
#include "modules.hpp"

using namespace loghat;

static void BM_CyclotomicPoly(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cyclotomic_poly(r));
}
BENCHMARK(BM_CyclotomicPoly)->Arg(12)->Arg(64)->Arg(210);

static void BM_InverseDifferent(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(inverse_different_generator(r));
}
BENCHMARK(BM_InverseDifferent)->Arg(8)->Arg(15)->Arg(24);

static void BM_FactorProduct(benchmark::State& state) {
  IntPoly p = int_poly({2, 0, 0, 0, 1}) * int_poly({3, 3, 0, 0, 1}) * int_poly({2, -1, 1}) * cyclotomic_poly(12);
  for (auto _ : state) benchmark::DoNotOptimize(factor_integer_poly(p));
}
BENCHMARK(BM_FactorProduct);

static void BM_WeightCheckQuartic(benchmark::State& state) {
  IntPoly p = int_poly({4, 2, 1, 1, 1});  // θ⁴ + θ³ + θ² + 2θ + 4, q = 2
  for (auto _ : state) benchmark::DoNotOptimize(weight_check(p, 2, 1));
}
BENCHMARK(BM_WeightCheckQuartic);

static void BM_SplitIsotypic(benchmark::State& state) {
  std::mt19937_64 rng(1);
  GammaModule m = testmod::conjugated(rng, {1, 3, 4, 6});
  for (auto _ : state) benchmark::DoNotOptimize(split_isotypic(m));
}
BENCHMARK(BM_SplitIsotypic);

static void BM_PpolRandom(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<LatticePairing> ps;
  for (int i = 0; i < 32; ++i) ps.push_back(testmod::random_dual_pairing(rng, 4, static_cast<std::size_t>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_pointwise_polarizable(ps[i++ % ps.size()]));
}
BENCHMARK(BM_PpolRandom)->Arg(1)->Arg(2)->Arg(3);

static void BM_ClassifyK2Example(benchmark::State& state) {
  GammaModule t = trivial_module(2);
  LatticePairing p = validate_pairing(t, t, 2, {QMatrix{{1, 0}, {0, 1}}, QMatrix{{1, 1}, {1, 2}}});
  for (auto _ : state) benchmark::DoNotOptimize(classify_pairing(p, 2));
}
BENCHMARK(BM_ClassifyK2Example);

static void BM_SameClassConjugates(benchmark::State& state) {
  std::mt19937_64 rng(3);
  auto f = cyclotomic_field(static_cast<int>(state.range(0)));
  std::vector<CycloMatrix> as, bs;
  for (int i = 0; i < 2; ++i) {
    CycloMatrix c = herm::random_integral_matrix(rng, f, 2, 2);
    as.push_back(c.conj_transpose() * c + CycloMatrix::identity(f, 2));
  }
  CycloMatrix g = herm::random_integral_matrix(rng, f, 2, 2) + CycloMatrix::identity(f, 2);
  for (const auto& a : as) bs.push_back(g.conj_transpose() * a * g);
  QMatrix lam = herm::trace_form(f, 2);
  TrkMatrixClass c1 = classify_rank_a(herm::pairing_of(as), lam), c2 = classify_rank_a(herm::pairing_of(bs), lam);
  for (auto _ : state) benchmark::DoNotOptimize(same_class(c1, c2));
}
BENCHMARK(BM_SameClassConjugates)->Arg(1)->Arg(3)->Arg(4);
BENCHMARK_MAIN();
