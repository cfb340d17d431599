#pragma once

#include "oip/device_model.hpp"
#include "oip/microstrip.hpp"
#include "oip/two_port.hpp"

#include <span>

namespace oip {

/// Evaluation board: identical feed lines either side of the gap. The board gap itself is folded
/// into the series element's reference plane.
struct BoardLines {
    MicrostripLine line;
    bool losses_enabled = false;
    double reference_impedance = 50.0;

    void validate() const;
};

/// S-parameters of the bare series element between two Z0 ports.
SParams element_point(const EquivalentCircuit& element, double frequency, double z0);

/// line -> series element -> line at one frequency.
SParams switch_point(const BoardLines& board, const LineCharacteristics& ch,
                     const EquivalentCircuit& element, double frequency);

/// Frequency sweep of the line-element-line cascade. Points are evaluated in parallel and
/// assembled in grid order.
TwoPortNetwork switch_response(const BoardLines& board, const EquivalentCircuit& element,
                               std::span<const double> frequencies);

/// Linearly spaced grid including both endpoints.
std::vector<double> linear_frequency_grid(double start, double stop, std::size_t points);

} // namespace oip
