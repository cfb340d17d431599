#include "oip/rf_network.hpp"

#include "oip/errors.hpp"
#include "oip/kernels.hpp"

#include <fmt/format.h>

namespace oip {

void BoardLines::validate() const {
    line.validate();
    if (!(reference_impedance > 0.0))
        throw InvalidArgument("board reference impedance must be > 0");
}

SParams element_point(const EquivalentCircuit& element, double frequency, double z0) {
    return abcd_to_s(abcd_series(impedance(element, frequency)), z0);
}

SParams switch_point(const BoardLines& board, const LineCharacteristics& ch,
                     const EquivalentCircuit& element, double frequency) {
    const AbcdMatrix feed = abcd_line(board.line, ch, frequency, board.losses_enabled);
    const AbcdMatrix gap = abcd_series(impedance(element, frequency));
    return abcd_to_s(cascade(cascade(feed, gap), feed), board.reference_impedance);
}

TwoPortNetwork switch_response(const BoardLines& board, const EquivalentCircuit& element,
                               std::span<const double> frequencies) {
    if (frequencies.empty())
        throw InvalidArgument("switch_response needs a non-empty frequency grid");
    TwoPortNetwork net;
    net.frequencies.assign(frequencies.begin(), frequencies.end());
    net.reference_impedance = board.reference_impedance;
    net.points.resize(net.frequencies.size());
    net.validate();
    net.points = parallel::frequency_sweep(board, element, frequencies);
    return net;
}

std::vector<double> linear_frequency_grid(double start, double stop, std::size_t points) {
    if (!(start > 0.0) || !(stop > start))
        throw InvalidArgument(
            fmt::format("frequency grid needs 0 < start < stop (got {} .. {})", start, stop));
    if (points < 2)
        throw InvalidArgument("frequency grid needs at least 2 points");
    std::vector<double> f(points);
    const double last = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i)
        f[i] = start + (stop - start) * (static_cast<double>(i) / last);
    f.back() = stop;
    return f;
}

} // namespace oip
