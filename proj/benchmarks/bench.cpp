#include <benchmark/benchmark.h>

#include <random>

#include "ohdet/contributor.hpp"
#include "ohdet/exact.hpp"
#include "ohdet/maxdet.hpp"

using namespace ohdet;

namespace {

IncidenceStructure random_full(int n, unsigned seed) {
    std::mt19937 rng(seed);
    IncidenceStructure H(n, n);
    for (int v = 0; v < n; ++v)
        for (int e = 0; e < n; ++e) H.set_entry(v, e, rng() & 1 ? 1 : -1);
    return H;
}

void BM_ExactDeterminant(benchmark::State& state) {
    IncidenceStructure H = random_full(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) {
        mpz_class d = exact_determinant(H);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_ExactDeterminant)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_ContributorDet(benchmark::State& state) {
    IncidenceStructure H = random_full(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        auto r = laplacian_det_via_contributors(H);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ContributorDet)->Arg(3)->Arg(4)->Arg(5);

void BM_ContributorDetParallel(benchmark::State& state) {
    IncidenceStructure H = random_full(5, 2);
    for (auto _ : state) {
        auto r = laplacian_det_via_contributors(H, kDefaultBudget,
                                                static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ContributorDetParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_ClassTally(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    IncidenceStructure H = random_full(n, 3);
    std::vector<int> tail(n);
    for (int v = 0; v < n; ++v) tail[v] = v;
    TailClassId cls = TailClassId::from_tail(tail);
    for (auto _ : state) {
        ClassTally t = class_tally(H, cls);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_ClassTally)->Arg(5)->Arg(7)->Arg(8);

void BM_ExhaustiveMaxdet(benchmark::State& state) {
    for (auto _ : state) {
        SearchResult r = exhaustive_maxdet(static_cast<int>(state.range(0)),
                                           static_cast<int>(state.range(1)));
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ExhaustiveMaxdet)->Args({5, 1})->Args({5, 4});

} // namespace

BENCHMARK_MAIN();
