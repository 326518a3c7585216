#include <benchmark/benchmark.h>

#include "hyperjac/hirzebruch.hpp"
#include "hyperjac/lbqf.hpp"
#include "hyperjac/random.hpp"

using namespace hyperjac;

namespace {

Field field_for(int64_t id) { return id == 0 ? Field::rationals() : Field::prime(static_cast<std::uint64_t>(id)); }

}  // namespace

// Resultant of two random forms of degree d.
static void BM_Resultant(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Field f = field_for(state.range(1));
    Rng rng(1);
    BinForm a = random_binform(f, d, rng);
    BinForm b = random_binform(f, d, rng);
    for (auto _ : state) benchmark::DoNotOptimize(resultant(a, b));
}
BENCHMARK(BM_Resultant)->ArgsProduct({{4, 8, 16, 32}, {0, 1000003}});

static void BM_DiscBinform(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Field f = field_for(state.range(1));
    Rng rng(2);
    BinForm a = random_binform(f, d, rng);
    for (auto _ : state) benchmark::DoNotOptimize(disc_binform(a));
}
BENCHMARK(BM_DiscBinform)->ArgsProduct({{4, 8, 16, 32}, {0, 1000003}});

static void BM_SquarefreeDecomposition(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Field f = Field::prime(1000003);
    Rng rng(3);
    BinForm g = random_binform(f, d / 2, rng);
    BinForm a = g * g * random_binform(f, d - 2 * (d / 2), rng);
    for (auto _ : state) benchmark::DoNotOptimize(squarefree_decomposition(a));
}
BENCHMARK(BM_SquarefreeDecomposition)->Arg(8)->Arg(16)->Arg(32);

// Full classification at (m, m+1, k) with genus growing in k.
static void BM_Classify(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    Field f = field_for(state.range(1));
    Lbqf l = random_form({1, 2, k}, f, 4);
    for (auto _ : state) benchmark::DoNotOptimize(classify(l));
    state.SetLabel("g = " + std::to_string(l.g()));
}
BENCHMARK(BM_Classify)->ArgsProduct({{0, 4, 8, 16}, {0, 101}});

static void BM_ApplyAutomorphism(benchmark::State& state) {
    const StratumIndex idx{0, static_cast<int>(state.range(0)), 2};
    Field f = Field::prime(101);
    Lbqf l = random_form(idx, f, 5);
    Automorphism phi = random_automorphism(f, idx, 6);
    for (auto _ : state) benchmark::DoNotOptimize(apply_automorphism(l, phi));
}
BENCHMARK(BM_ApplyAutomorphism)->Arg(1)->Arg(4)->Arg(8);

static void BM_SplitQuadratic(benchmark::State& state) {
    const int e = static_cast<int>(state.range(0));
    Field f = Field::rationals();
    SurfaceCtx ctx(0, 1);
    Rng rng(7);
    CoxFactor p1(random_binform(f, e - 1, rng), random_binform(f, e, rng), e, ctx);
    CoxFactor p2(random_binform(f, e, rng), random_binform(f, e + 1, rng), e + 1, ctx);
    Lbqf l = multiply_factors(ctx, p1, p2);
    for (auto _ : state) benchmark::DoNotOptimize(split_quadratic(l));
}
BENCHMARK(BM_SplitQuadratic)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK_MAIN();
