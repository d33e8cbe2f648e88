#include <benchmark/benchmark.h>

#include "rinf/exact_linear.hpp"
#include "rinf/glz_conjugacy.hpp"
#include "rinf/modular_group.hpp"
#include "rinf/reidemeister.hpp"

namespace {

using namespace rinf;

// Fibonacci-like monodromy with large entries: T^k applied to (2 1; 1 1).
Mat2 big_anosov(int k) {
    return mat_pow(Mat2{2, 1, 1, 1}, k);
}

void BM_decompose(benchmark::State& state) {
    const Mat2 m = big_anosov(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(decompose(m));
}
BENCHMARK(BM_decompose)->Arg(4)->Arg(16)->Arg(64);

void BM_smith_normal_form(benchmark::State& state) {
    const Mat2 m = Mat2::identity() - big_anosov(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_smith_normal_form)->Arg(4)->Arg(16)->Arg(64);

void BM_fundamental_unit(benchmark::State& state) {
    const Mat2 m = big_anosov(static_cast<int>(state.range(0)));
    const CommutantLattice L = commutant_lattice(m);
    for (auto _ : state) benchmark::DoNotOptimize(fundamental_unit(L));
}
BENCHMARK(BM_fundamental_unit)->Arg(4)->Arg(16);

void BM_gl2z_conjugate(benchmark::State& state) {
    const Mat2 a = big_anosov(static_cast<int>(state.range(0)));
    const Mat2 p{3, 2, 4, 3};
    const Mat2 b = p * a * inverse_unimodular(p);
    for (auto _ : state) benchmark::DoNotOptimize(gl2z_conjugate(a, b));
}
BENCHMARK(BM_gl2z_conjugate)->Arg(4)->Arg(16);

void BM_decide_sol(benchmark::State& state) {
    const Mat2 a = big_anosov(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(decide_sol_torus_bundle(a));
}
BENCHMARK(BM_decide_sol)->Arg(2)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
