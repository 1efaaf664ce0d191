// Serial reference vs OpenMP kernels on the figure-sized workloads.

#include <benchmark/benchmark.h>

#include <cmath>

#include "phasediff/bath_kernels.hpp"
#include "phasediff/kernels.hpp"
#include "phasediff/phase_stats.hpp"
#include "phasediff/qnd_phase.hpp"

namespace {

using namespace phasediff;

Execution mode(const benchmark::State& state)
{
    return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

// Fourier sum of a dense Hermitian matrix (the oscillator phase distribution kernel).
void BM_HermitianFourierSum(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(1));
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Random(n, n);
    x = (x + x.adjoint()).eval();
    const PhaseGrid grid(720);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_fourier_sum(x, grid, mode(state)));
    }
    state.SetLabel(state.range(0) == 0 ? "serial" : "openmp");
}
BENCHMARK(BM_HermitianFourierSum)->ArgsProduct({{0, 1}, {40, 160}})->Unit(benchmark::kMillisecond);

// One dispersion curve of the ten-atom QND family (81 sweep points).
void BM_DispersionSweep(benchmark::State& state)
{
    const auto rho0 = atomic_squeezed_density({HalfInteger::from_int(5), HalfInteger::from_int(5), -0.01832});
    const std::vector<double> rs = linspace(-2.0, 2.0, 81);
    const PhaseGrid grid(720);
    for (auto _ : state) {
        const auto curve = dispersion_sweep(
            "r", rs,
            [&](double r) {
                QndBathSpec bath;
                bath.gamma0 = 0.0025;
                bath.omega_c = 100.0;
                bath.r = r;
                bath.regime = HighTemperature{100.0};
                const auto rho = qnd_evolve(rho0, 1.0, 1.0, eta(1.0, bath), gamma_qnd(1.0, bath));
                return phase_distribution_atomic(rho, grid, Execution::Serial);
            },
            mode(state));
        benchmark::DoNotOptimize(curve);
    }
    state.SetLabel(state.range(0) == 0 ? "serial" : "openmp");
}
BENCHMARK(BM_DispersionSweep)->ArgsProduct({{0, 1}})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
