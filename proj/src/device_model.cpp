#include "oip/device_model.hpp"

#include "oip/constants.hpp"
#include "oip/elliptic.hpp"
#include "oip/errors.hpp"

#include <cmath>
#include <fmt/format.h>

namespace oip {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

} // namespace

void ChipletGeometry::validate() const {
    if (!positive_finite(gap_length) || !positive_finite(width) || !positive_finite(thickness))
        throw InvalidArgument("chiplet gap_length, width and thickness must be > 0");
    if (!positive_finite(length) || length <= gap_length)
        throw InvalidArgument("chiplet length must be > 0 and longer than the gap");
    if (!(silicon_permittivity >= 1.0))
        throw InvalidArgument("chiplet silicon_permittivity must be >= 1");
    if (!(std::isfinite(contact_resistance) && contact_resistance >= 0.0))
        throw InvalidArgument("chiplet contact_resistance must be >= 0");
    if (gap_capacitance_override && !positive_finite(*gap_capacitance_override))
        throw InvalidArgument("chiplet gap_capacitance_override must be > 0");
}

EquivalentCircuit EquivalentCircuit::series_r(double resistance, Provenance p) {
    EquivalentCircuit ec{Topology::SeriesR, resistance, std::nullopt, p};
    ec.validate();
    return ec;
}

EquivalentCircuit EquivalentCircuit::series_r_par_c(double resistance, double capacitance,
                                                    Provenance p) {
    EquivalentCircuit ec{Topology::SeriesRparC, resistance, capacitance, p};
    ec.validate();
    return ec;
}

void EquivalentCircuit::validate() const {
    switch (topology) {
    case Topology::SeriesR:
        if (!(std::isfinite(resistance) && resistance >= 0.0))
            throw InvalidArgument(fmt::format("series resistance must be >= 0 (got {})", resistance));
        if (capacitance)
            throw InvalidArgument("SeriesR circuit must not carry a capacitance");
        break;
    case Topology::SeriesRparC:
        if (!positive_finite(resistance))
            throw InvalidArgument(fmt::format("R||C resistance must be > 0 (got {})", resistance));
        if (!capacitance || !positive_finite(*capacitance))
            throw InvalidArgument("R||C circuit needs a capacitance > 0");
        break;
    }
}

double sheet_conductance(std::span<const double> depths, std::span<const double> sigma,
                         double thickness) {
    if (depths.size() != sigma.size())
        throw GridMismatch("depth grid and conductivity samples differ in length");
    if (depths.size() < 2)
        throw GridMismatch("depth grid needs at least 2 points");
    if (depths.front() != 0.0)
        throw GridMismatch(fmt::format("depth grid starts at {} m, expected 0", depths.front()));
    if (std::abs(depths.back() - thickness) > 1e-12 * thickness)
        throw GridMismatch(fmt::format("depth grid ends at {} m, expected thickness {} m",
                                       depths.back(), thickness));
    double sum = 0.0;
    for (std::size_t i = 1; i < depths.size(); ++i) {
        const double dz = depths[i] - depths[i - 1];
        if (!(dz > 0.0))
            throw GridMismatch("depth grid must be strictly increasing");
        sum += 0.5 * dz * (sigma[i] + sigma[i - 1]);
    }
    return sum;
}

double gap_resistance(const ChipletGeometry& chiplet, double sheet_conductance) {
    chiplet.validate();
    if (!positive_finite(sheet_conductance))
        throw InvalidArgument(
            fmt::format("sheet conductance must be > 0 (got {})", sheet_conductance));
    return chiplet.gap_length / (chiplet.width * sheet_conductance) +
           2.0 * chiplet.contact_resistance;
}

double dark_resistance(const ChipletGeometry& chiplet, const SiliconMaterial& mat) {
    chiplet.validate();
    mat.validate();
    return mat.dark_resistivity * chiplet.gap_length / (chiplet.width * chiplet.thickness) +
           2.0 * chiplet.contact_resistance;
}

double off_capacitance(const ChipletGeometry& chiplet) {
    chiplet.validate();
    if (chiplet.gap_capacitance_override)
        return *chiplet.gap_capacitance_override;
    const double overlap = 0.5 * chiplet.length - 0.5 * chiplet.gap_length;
    const double k = chiplet.gap_length / (chiplet.gap_length + 2.0 * overlap);
    const double eps_eff = 0.5 * (chiplet.silicon_permittivity + 1.0);
    return kVacuumPermittivity * eps_eff * chiplet.width * elliptic_k_ratio(k);
}

EquivalentCircuit switch_element(const ChipletGeometry& chiplet, const LaserExcitation& laser,
                                 const SiliconMaterial& mat, std::size_t profile_points) {
    chiplet.validate();
    const CarrierProfile profile = carrier_profile(laser, mat, chiplet.thickness, profile_points);
    const std::vector<double> sigma = conductivity_profile(profile, mat);
    const double gs = sheet_conductance(profile.depths, sigma, chiplet.thickness);
    return EquivalentCircuit::series_r_par_c(gap_resistance(chiplet, gs), off_capacitance(chiplet));
}

std::complex<double> impedance(const EquivalentCircuit& ec, double frequency) {
    if (!(frequency > 0.0))
        throw InvalidArgument(fmt::format("frequency must be > 0 (got {})", frequency));
    if (ec.topology == Topology::SeriesR)
        return {ec.resistance, 0.0};
    const double omega_rc = 2.0 * kPi * frequency * ec.resistance * *ec.capacitance;
    return ec.resistance / std::complex<double>(1.0, omega_rc);
}

} // namespace oip
