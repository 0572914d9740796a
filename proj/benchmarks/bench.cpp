#include <benchmark/benchmark.h>

#include "dwell/expansion.hpp"
#include "dwell/hilbert.hpp"
#include "dwell/numerics.hpp"
#include "dwell/povm.hpp"
#include "dwell/trap.hpp"

namespace {

const dwell::WavepacketFamily kFamily{12.0, 1.0};
const dwell::SpatialGrid kGrid{-80.0, 80.0, 4001};

void BM_CoherentState(benchmark::State& state) {
    const int N = int(state.range(0));
    dwell::CoherentParams p(0.37, 1.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwell::coherent_state(N, p));
    }
}
BENCHMARK(BM_CoherentState)->Arg(50)->Arg(500);

void BM_GroundState(benchmark::State& state) {
    const int N = int(state.range(0));
    dwell::TrapParams p{0.0, 0.0, 1.0, 10.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwell::ground_state(N, p));
    }
}
BENCHMARK(BM_GroundState)->Arg(50)->Arg(200);

void BM_ShotDensity(benchmark::State& state) {
    dwell::ModeTable table(kFamily, 30.0, kGrid);
    dwell::CoherentParams p(0.5, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwell::shot_density(table, 100, p));
    }
}
BENCHMARK(BM_ShotDensity);

void BM_PovmQuadrature(benchmark::State& state) {
    const int N = int(state.range(0));
    auto fock = dwell::fock_state(N, N / 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwell::povm_average_quadrature(
            fock, kFamily, 30.0, kGrid, dwell::default_xi_order(N),
            dwell::default_phi_order(N)));
    }
}
BENCHMARK(BM_PovmQuadrature)->Arg(10)->Arg(50);

void BM_MonteCarlo(benchmark::State& state) {
    dwell::RunConfig rc;
    rc.grid = kGrid;
    rc.t = 30.0;
    rc.n_shots = int(state.range(0));
    rc.n_threads = int(state.range(1));
    auto fock = dwell::fock_state(100, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwell::run_monte_carlo(fock, kFamily, rc));
    }
}
BENCHMARK(BM_MonteCarlo)->Args({2000, 1})->Args({2000, 4});

}  // namespace

BENCHMARK_MAIN();
