#include <benchmark/benchmark.h>

#include "rankone/cluster.hpp"
#include "rankone/detideal.hpp"
#include "rankone/hilbert.hpp"
#include "rankone/orderposet.hpp"

using namespace rankone;

static void BM_BuchbergerVerifyDiag(benchmark::State& state) {
  const Rank n(static_cast<int>(state.range(0)));
  const Labeling lab = Labeling::spade(n);
  const auto gens = minor_generators(lab);
  const auto vars = VariableSet::identity(lab.var_count());
  for (auto _ : state) {
    auto report = buchberger_verify(gens, vars);
    benchmark::DoNotOptimize(report.ok);
  }
}
BENCHMARK(BM_BuchbergerVerifyDiag)->DenseRange(2, 4);

static void BM_BuchbergerCompleteDiag(benchmark::State& state) {
  const Rank n(static_cast<int>(state.range(0)));
  const Labeling lab = Labeling::spade(n);
  const auto gens = minor_generators(lab);
  const auto vars = VariableSet::identity(lab.var_count());
  for (auto _ : state) {
    auto basis = buchberger_complete(gens, vars);
    benchmark::DoNotOptimize(basis.size());
  }
}
BENCHMARK(BM_BuchbergerCompleteDiag)->DenseRange(2, 4);

static void BM_OminCompletion(benchmark::State& state) {
  for (auto _ : state) {
    auto result = verify_omin_via_gb(2);
    benchmark::DoNotOptimize(result.matches_paper);
  }
}
BENCHMARK(BM_OminCompletion);

static void BM_ClusterComplex(benchmark::State& state) {
  const Rank n(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto cx = build_cluster_complex(n);
    benchmark::DoNotOptimize(cx.facets().size());
  }
}
BENCHMARK(BM_ClusterComplex)->DenseRange(2, 5);

static void BM_HilbertSeriesDiag(benchmark::State& state) {
  const Rank n(static_cast<int>(state.range(0)));
  const Labeling lab = Labeling::spade(n);
  const auto init = initial_generators(lab);
  for (auto _ : state) {
    auto series = hilbert_series_monomial_quotient(
        MonomialIdeal::make(init, lab.var_count()));
    benchmark::DoNotOptimize(series.denom_power());
  }
}
BENCHMARK(BM_HilbertSeriesDiag)->DenseRange(2, 4);

static void BM_CompatibilityTable(benchmark::State& state) {
  const Rank n(static_cast<int>(state.range(0)));
  const auto roots = almost_positive_roots(n);
  for (auto _ : state) {
    int sum = 0;
    for (const auto& a : roots)
      for (const auto& b : roots) sum += compatibility_degree(a, b, n);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_CompatibilityTable)->DenseRange(2, 6);

static void BM_ShellingVerification(benchmark::State& state) {
  const Rank n(static_cast<int>(state.range(0)));
  const auto cx = order_complex(n);
  const auto order = paper_shelling_order_masks(n);
  for (auto _ : state) {
    auto res = verify_shelling(cx, order);
    benchmark::DoNotOptimize(res.ok);
  }
}
BENCHMARK(BM_ShellingVerification)->DenseRange(2, 6);

BENCHMARK_MAIN();
