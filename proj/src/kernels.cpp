#include "oip/kernels.hpp"

#include "oip/errors.hpp"

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oip {

namespace {

// Runs body(i) for i in [0, n) across threads. If any iterations throw, the exception from the
// lowest index is rethrown, matching what the serial loop would have raised.
template <typename Body>
void for_each_index(std::size_t n, Body&& body) {
    std::exception_ptr first_error;
    std::size_t first_index = n;
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(oip_kernel_error)
            {
                if (static_cast<std::size_t>(i) < first_index) {
                    first_index = static_cast<std::size_t>(i);
                    first_error = std::current_exception();
                }
            }
        }
    }
    if (first_error)
        std::rethrow_exception(first_error);
}

template <typename Body>
void for_each_index_serial(std::size_t n, Body&& body) {
    for (std::size_t i = 0; i < n; ++i)
        body(i);
}

LaserExcitation at_power(LaserExcitation laser, double power) {
    laser.power = power;
    return laser;
}

PowerSweep prepare_power_sweep(const BoardLines& board, std::span<const double> powers,
                               std::span<const double> frequencies) {
    board.validate();
    if (powers.empty())
        throw InvalidArgument("power sweep needs at least one laser power");
    if (frequencies.empty())
        throw InvalidArgument("power sweep needs a non-empty frequency grid");
    PowerSweep sweep;
    sweep.powers.assign(powers.begin(), powers.end());
    sweep.frequencies.assign(frequencies.begin(), frequencies.end());
    TwoPortNetwork probe{sweep.frequencies, std::vector<SParams>(frequencies.size()),
                         board.reference_impedance};
    probe.validate();
    sweep.elements.resize(powers.size());
    sweep.points.resize(powers.size() * frequencies.size());
    return sweep;
}

template <typename Loop>
std::vector<double> density_samples_impl(const LaserExcitation& laser, const SiliconMaterial& mat,
                                         std::span<const double> depths, Loop loop) {
    std::vector<double> out(depths.size());
    loop(depths.size(), [&](std::size_t i) { out[i] = excess_density(laser, mat, depths[i]); });
    return out;
}

template <typename Loop>
std::vector<SParams> frequency_sweep_impl(const BoardLines& board, const EquivalentCircuit& element,
                                          std::span<const double> frequencies, Loop loop) {
    board.validate();
    element.validate();
    const LineCharacteristics ch = microstrip_analyze(board.line);
    std::vector<SParams> out(frequencies.size());
    loop(frequencies.size(),
         [&](std::size_t i) { out[i] = switch_point(board, ch, element, frequencies[i]); });
    return out;
}

template <typename Loop>
PowerSweep power_sweep_impl(const BoardLines& board, const ChipletGeometry& chiplet,
                            const LaserExcitation& laser, const SiliconMaterial& mat,
                            std::span<const double> powers, std::span<const double> frequencies,
                            std::size_t profile_points, Loop loop) {
    PowerSweep sweep = prepare_power_sweep(board, powers, frequencies);
    loop(powers.size(), [&](std::size_t i) {
        sweep.elements[i] = switch_element(chiplet, at_power(laser, powers[i]), mat, profile_points);
    });
    const LineCharacteristics ch = microstrip_analyze(board.line);
    const std::size_t nf = frequencies.size();
    loop(sweep.points.size(), [&](std::size_t k) {
        sweep.points[k] = switch_point(board, ch, sweep.elements[k / nf], frequencies[k % nf]);
    });
    return sweep;
}

struct SerialLoop {
    template <typename Body>
    void operator()(std::size_t n, Body&& body) const {
        for_each_index_serial(n, std::forward<Body>(body));
    }
};

struct ParallelLoop {
    template <typename Body>
    void operator()(std::size_t n, Body&& body) const {
        for_each_index(n, std::forward<Body>(body));
    }
};

} // namespace

namespace serial {

std::vector<double> density_samples(const LaserExcitation& laser, const SiliconMaterial& mat,
                                    std::span<const double> depths) {
    return density_samples_impl(laser, mat, depths, SerialLoop{});
}

std::vector<SParams> frequency_sweep(const BoardLines& board, const EquivalentCircuit& element,
                                     std::span<const double> frequencies) {
    return frequency_sweep_impl(board, element, frequencies, SerialLoop{});
}

PowerSweep power_sweep(const BoardLines& board, const ChipletGeometry& chiplet,
                       const LaserExcitation& laser, const SiliconMaterial& mat,
                       std::span<const double> powers, std::span<const double> frequencies,
                       std::size_t profile_points) {
    return power_sweep_impl(board, chiplet, laser, mat, powers, frequencies, profile_points,
                            SerialLoop{});
}

} // namespace serial

namespace parallel {

std::vector<double> density_samples(const LaserExcitation& laser, const SiliconMaterial& mat,
                                    std::span<const double> depths) {
    return density_samples_impl(laser, mat, depths, ParallelLoop{});
}

std::vector<SParams> frequency_sweep(const BoardLines& board, const EquivalentCircuit& element,
                                     std::span<const double> frequencies) {
    return frequency_sweep_impl(board, element, frequencies, ParallelLoop{});
}

PowerSweep power_sweep(const BoardLines& board, const ChipletGeometry& chiplet,
                       const LaserExcitation& laser, const SiliconMaterial& mat,
                       std::span<const double> powers, std::span<const double> frequencies,
                       std::size_t profile_points) {
    return power_sweep_impl(board, chiplet, laser, mat, powers, frequencies, profile_points,
                            ParallelLoop{});
}

} // namespace parallel

int kernel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace oip
