#include <benchmark/benchmark.h>

#include "cylschur/matching.hpp"
#include "cylschur/motzkin.hpp"
#include "cylschur/tableau.hpp"
#include "cylschur/vacillating.hpp"

using namespace cylschur;

static void BM_CsytChainDp(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Int c = csyt_count(n, 5, 5, CsytMethod::chain_dp);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CsytChainDp)->Arg(8)->Arg(12)->Arg(16);

static void BM_VtCount(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Int c = vt_count(n, 3, 3, VtVariant::plain);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_VtCount)->Arg(8)->Arg(12)->Arg(16);

static void BM_MatchingProfiles(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Int total = 0;
        for_each_matching(n, [&](const Matching& m) {
            auto p = crossing_nesting_profile(m);
            total += p.max_crossing2 + p.max_nesting2;
        });
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_MatchingProfiles)->Arg(6)->Arg(8);

static void BM_MotzkinDp(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Int c = count_family(PathFamily::motzkin, n, 4);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_MotzkinDp)->Arg(14)->Arg(20);

BENCHMARK_MAIN();
