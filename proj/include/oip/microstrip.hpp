#pragma once

#include "oip/two_port.hpp"

namespace oip {

struct MicrostripLine {
    double substrate_epsilon = 0.0;       // eps_r >= 1
    double substrate_height = 0.0;        // m
    double trace_width = 0.0;             // m
    double copper_thickness = 0.0;        // m, 0 disables the thickness correction
    double physical_length = 0.0;         // m
    double loss_tangent = 0.0;
    double conductor_conductivity = 5.8e7; // S/m

    void validate() const;
};

struct LineCharacteristics {
    double z0 = 0.0;      // ohm
    double eps_eff = 0.0;
};

/// Quasi-static Hammerstad-Jensen Z0 and effective permittivity, with the Hammerstad-Jensen
/// strip-thickness correction when copper_thickness > 0. No dispersion.
LineCharacteristics microstrip_analyze(const MicrostripLine& line);

/// Width giving target_z0 for the given strip thickness (default 0), by bisection on log(w/h).
/// target_z0 must lie in [10, 200] ohm.
/// Throws NoConvergence if the 0.1 % round-trip tolerance is not met.
double microstrip_synthesize(double eps_r, double height, double target_z0,
                             double copper_thickness = 0.0);

/// Attenuation in Np/m: dielectric (loss tangent) plus conductor skin loss R_s / (Z0 w).
double microstrip_attenuation(const MicrostripLine& line, const LineCharacteristics& ch,
                              double frequency);

/// [[cosh gl, Z0 sinh gl], [sinh gl / Z0, cosh gl]], gamma = alpha + j beta.
AbcdMatrix abcd_line(const MicrostripLine& line, double frequency, bool with_losses = false);
AbcdMatrix abcd_line(const MicrostripLine& line, const LineCharacteristics& ch, double frequency,
                     bool with_losses);

} // namespace oip
