#include <benchmark/benchmark.h>

#include "cylschur/epoly.hpp"
#include "cylschur/littlewood.hpp"
#include "cylschur/tableau.hpp"

using namespace cylschur;

static void BM_JacobiTrudiDet(benchmark::State& state) {
    int h = static_cast<int>(state.range(0));
    Partition lam(std::vector<int>(h, 2));  // the 2^h rectangle
    for (auto _ : state) {
        EPoly p = cylindric_schur_jt(lam, h, 2, 3, 8);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_JacobiTrudiDet)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

static void BM_VerifyIdentityCell(benchmark::State& state) {
    int deg = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto rep = verify_identity(IdentityId::abl_odd, 1, 2, 2, deg);
        benchmark::DoNotOptimize(rep.equal);
    }
}
BENCHMARK(BM_VerifyIdentityCell)->Arg(4)->Arg(6)->Arg(8);

static void BM_IntPfaffian(benchmark::State& state) {
    int size = static_cast<int>(state.range(0));
    std::vector<std::vector<Int>> a(size, std::vector<Int>(size, 0));
    int v = 1;
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) {
            a[i][j] = (v = (v * 7) % 11) - 5;
            a[j][i] = -a[i][j];
        }
    for (auto _ : state) {
        Int pf = int_pfaffian(a);
        benchmark::DoNotOptimize(pf);
    }
}
BENCHMARK(BM_IntPfaffian)->Arg(6)->Arg(10)->Arg(14);
