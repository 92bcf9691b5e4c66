#include <benchmark/benchmark.h>

#include "prym/abel_prym.hpp"
#include "prym/divisor.hpp"
#include "prym/fixtures.hpp"
#include "prym/ogod.hpp"
#include "prym/prym_group.hpp"
#include "prym/zeta.hpp"

using namespace prym;

namespace {

FreeDoubleCover bench_cover(int extra) {
    Rng rng(12345);
    Graph base = random_connected_graph(rng, 7, extra);
    return random_cover(rng, base);
}

void bm_prym_order_ratio(benchmark::State& state) {
    FreeDoubleCover cov = bench_cover(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(prym_order(cov, PrymOrderMethod::ratio));
}

void bm_prym_order_signed_det(benchmark::State& state) {
    FreeDoubleCover cov = bench_cover(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(prym_order(cov, PrymOrderMethod::signed_det));
}

void bm_prym_order_ogod_sum(benchmark::State& state) {
    FreeDoubleCover cov = bench_cover(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(prym_order(cov, PrymOrderMethod::ogod_sum));
}

void bm_ogod_enumeration(benchmark::State& state) {
    FreeDoubleCover cov = bench_cover(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_ogods(cov));
}

void bm_zeta_reciprocal(benchmark::State& state) {
    FreeDoubleCover cov = bench_cover(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ihara_zeta_reciprocal(cov.total));
}

void bm_artin_L_reciprocal(benchmark::State& state) {
    FreeDoubleCover cov = bench_cover(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(artin_L_reciprocal(cov));
}

void bm_fiber(benchmark::State& state) {
    ApContext ctx = make_ap_context(loop_biangle_loop_cover(loop_biangle_loop_demo_lengths()));
    SymPoint sp{{1, Rat(1, 3)}, {3, Rat(2, 7)}};
    TorsorPoint target = torsor_coordinates(ctx, sp);
    for (auto _ : state) benchmark::DoNotOptimize(fiber(ctx, target));
}

void bm_ker_nm_structure(benchmark::State& state) {
    FreeDoubleCover cov = bench_cover(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ker_nm_structure(cov));
}

BENCHMARK(bm_prym_order_ratio)->Arg(3)->Arg(5);
BENCHMARK(bm_prym_order_signed_det)->Arg(3)->Arg(5);
BENCHMARK(bm_prym_order_ogod_sum)->Arg(3)->Arg(5);
BENCHMARK(bm_ogod_enumeration)->Arg(3)->Arg(5);
BENCHMARK(bm_zeta_reciprocal)->Arg(3)->Arg(5);
BENCHMARK(bm_artin_L_reciprocal)->Arg(3)->Arg(5);
BENCHMARK(bm_fiber);
BENCHMARK(bm_ker_nm_structure)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
