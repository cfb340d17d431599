#pragma once

// Grid kernels in two flavours with identical per-point arithmetic: `serial` is the reference
// implementation, `parallel` distributes grid points over OpenMP threads. Results are written by
// index, so both produce bit-identical output regardless of thread count.

#include "oip/carrier_physics.hpp"
#include "oip/device_model.hpp"
#include "oip/rf_network.hpp"

#include <span>
#include <vector>

namespace oip {

/// Power-major (power, frequency) grid of forward-modelled switch responses.
struct PowerSweep {
    std::vector<double> powers;      // W
    std::vector<double> frequencies; // Hz
    std::vector<EquivalentCircuit> elements;
    std::vector<SParams> points; // points[ip * frequencies.size() + jf]

    const SParams& at(std::size_t ip, std::size_t jf) const {
        return points[ip * frequencies.size() + jf];
    }
};

namespace serial {

std::vector<double> density_samples(const LaserExcitation& laser, const SiliconMaterial& mat,
                                    std::span<const double> depths);

std::vector<SParams> frequency_sweep(const BoardLines& board, const EquivalentCircuit& element,
                                     std::span<const double> frequencies);

/// laser.power is replaced by each entry of powers in turn.
PowerSweep power_sweep(const BoardLines& board, const ChipletGeometry& chiplet,
                       const LaserExcitation& laser, const SiliconMaterial& mat,
                       std::span<const double> powers, std::span<const double> frequencies,
                       std::size_t profile_points = kDefaultProfilePoints);

} // namespace serial

namespace parallel {

std::vector<double> density_samples(const LaserExcitation& laser, const SiliconMaterial& mat,
                                    std::span<const double> depths);

std::vector<SParams> frequency_sweep(const BoardLines& board, const EquivalentCircuit& element,
                                     std::span<const double> frequencies);

PowerSweep power_sweep(const BoardLines& board, const ChipletGeometry& chiplet,
                       const LaserExcitation& laser, const SiliconMaterial& mat,
                       std::span<const double> powers, std::span<const double> frequencies,
                       std::size_t profile_points = kDefaultProfilePoints);

} // namespace parallel

/// Threads the parallel kernels will use (1 when built without OpenMP).
int kernel_threads();

} // namespace oip
