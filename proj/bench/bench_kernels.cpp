// Serial reference vs OpenMP kernels on the default board and chiplet.
#include "oip/config.hpp"
#include "oip/constants.hpp"
#include "oip/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace oip;

namespace {

LaserExcitation laser(double power) {
    LaserExcitation l;
    l.power = power;
    l.wavelength = 915e-9;
    l.spot_area = kPi * 50e-6 * 50e-6;
    l.coupling_efficiency = 5.7e-4;
    return l;
}

std::vector<double> powers(std::size_t n) {
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i)
        p[i] = 1.5 * static_cast<double>(i) / static_cast<double>(n - 1);
    return p;
}

template <auto Kernel>
void density(benchmark::State& state) {
    const auto grid = uniform_depth_grid(200e-6, static_cast<std::size_t>(state.range(0)));
    const SiliconMaterial mat = defaults::material();
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(laser(0.2), mat, grid));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void frequency(benchmark::State& state) {
    const auto freqs = linear_frequency_grid(1e9, 4e9, static_cast<std::size_t>(state.range(0)));
    BoardLines board = defaults::board();
    board.losses_enabled = true;
    const auto ec = EquivalentCircuit::series_r_par_c(22.5e3, 91e-15);
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(board, ec, freqs));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void power(benchmark::State& state) {
    const auto p = powers(static_cast<std::size_t>(state.range(0)));
    const auto freqs = linear_frequency_grid(1e9, 4e9, 31);
    const BoardLines board = defaults::board();
    const ChipletGeometry ch = defaults::chiplet();
    const SiliconMaterial mat = defaults::material();
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(board, ch, laser(0.0), mat, p, freqs, kDefaultProfilePoints));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(density<serial::density_samples>)->Name("density/serial")->Range(1 << 10, 1 << 18);
BENCHMARK(density<parallel::density_samples>)->Name("density/parallel")->Range(1 << 10, 1 << 18)->UseRealTime();
BENCHMARK(frequency<serial::frequency_sweep>)->Name("frequency/serial")->Range(1 << 8, 1 << 16);
BENCHMARK(frequency<parallel::frequency_sweep>)->Name("frequency/parallel")->Range(1 << 8, 1 << 16)->UseRealTime();
BENCHMARK(power<serial::power_sweep>)->Name("power/serial")->RangeMultiplier(4)->Range(4, 256);
BENCHMARK(power<parallel::power_sweep>)->Name("power/parallel")->RangeMultiplier(4)->Range(4, 256)->UseRealTime();

BENCHMARK_MAIN();
