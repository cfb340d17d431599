#pragma once

#include "oip/carrier_physics.hpp"

#include <complex>
#include <cstddef>
#include <optional>
#include <span>

namespace oip {

/// Gold-plated silicon die bridging the microstrip gap.
struct ChipletGeometry {
    double gap_length = 0.0;         // m, unplated gap the plasma must bridge
    double width = 0.0;              // m
    double thickness = 0.0;          // m
    double length = 0.0;             // m, overall die length (sets the trace overlap for C)
    double silicon_permittivity = 11.7;
    double contact_resistance = 0.0; // ohm per contact
    std::optional<double> gap_capacitance_override; // F

    void validate() const;
};

enum class Topology { SeriesR, SeriesRparC };
enum class Provenance { ForwardModeled, Fitted };

/// Lumped series element across the gap. resistance >= 0 for SeriesR (0 is a through short),
/// > 0 for SeriesRparC; capacitance is set iff the topology is SeriesRparC.
struct EquivalentCircuit {
    Topology topology = Topology::SeriesR;
    double resistance = 0.0;
    std::optional<double> capacitance;
    Provenance provenance = Provenance::ForwardModeled;

    static EquivalentCircuit series_r(double resistance, Provenance p = Provenance::ForwardModeled);
    static EquivalentCircuit series_r_par_c(double resistance, double capacitance,
                                            Provenance p = Provenance::ForwardModeled);

    void validate() const;
};

inline constexpr std::size_t kDefaultProfilePoints = 401;

/// Trapezoidal integral of sigma(z) over the depth grid, in S. Throws GridMismatch unless the
/// grid starts at 0 and ends at thickness.
double sheet_conductance(std::span<const double> depths, std::span<const double> sigma,
                         double thickness);

/// R = g / (w G_s) + 2 R_c for lateral conduction across the gap.
double gap_resistance(const ChipletGeometry& chiplet, double sheet_conductance);

/// Bulk resistance of the unilluminated die, rho g / (w t) + 2 R_c,, independent of illumination.
double dark_resistance(const ChipletGeometry& chiplet, const SiliconMaterial& mat);

/// Parasitic capacitance between the two gold pads: the override if set, otherwise the
/// coplanar-strip estimate eps0 (eps_Si + 1) / 2 * w * K(k') / K(k), k = g / (g + 2 s) with
/// s = length / 2 - g / 2.
double off_capacitance(const ChipletGeometry& chiplet);

/// Forward model: R from the depth-integrated conductivity under illumination, C from
/// off_capacitance. Always SeriesRparC; the ON state is the small-R limit.
EquivalentCircuit switch_element(const ChipletGeometry& chiplet, const LaserExcitation& laser,
                                 const SiliconMaterial& mat,
                                 std::size_t profile_points = kDefaultProfilePoints);

std::complex<double> impedance(const EquivalentCircuit& ec, double frequency);

} // namespace oip
