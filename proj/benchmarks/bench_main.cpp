#include "psilab/equivariant.hpp"
#include "psilab/quotient.hpp"

#include <benchmark/benchmark.h>

using namespace psilab;

static void BM_OrbitSpanModP(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    PrimeField P(1000003);
    auto f = sample_general_f(n, 3, 1, 5);
    MonomialIndex idx(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(orbit_span(P, f, idx).rank());
    state.SetLabel("dim R_3 = " + std::to_string(idx.size()));
}
BENCHMARK(BM_OrbitSpanModP)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

template <class F>
static void koszul_case(benchmark::State& state, const F& field) {
    const int n = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
    auto I = make_psi_ideal(field, sample_general_f(n, d, 1, 5));
    QuotientAlgebra<F> A(field, n, d, I.degree_d);
    auto M = A.as_module();
    for (auto _ : state) benchmark::DoNotOptimize(koszul_betti(M).total(1));
}

static void BM_KoszulBettiQ(benchmark::State& state) { koszul_case(state, RationalField{}); }
BENCHMARK(BM_KoszulBettiQ)->Args({5, 2})->Args({5, 3})->Args({6, 3})->Unit(benchmark::kMillisecond);

static void BM_KoszulBettiModP(benchmark::State& state) { koszul_case(state, PrimeField(1000003)); }
BENCHMARK(BM_KoszulBettiModP)->Args({5, 3})->Args({6, 3})->Args({8, 4})->Unit(benchmark::kMillisecond);

static void BM_TorCharacters(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RationalField Q;
    auto I = make_psi_ideal(Q, sample_general_f(n, 2, 1, 5));
    QuotientAlgebra<RationalField> A(Q, n, 2, I.degree_d);
    auto M = A.as_module();
    for (auto _ : state) benchmark::DoNotOptimize(all_tor_characters(M).size());
}
BENCHMARK(BM_TorCharacters)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_RestrictionDecomposition(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(restriction_decomposition(hook(4, 3), n).dimension());
}
BENCHMARK(BM_RestrictionDecomposition)->Arg(6)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
