#include "oip/microstrip.hpp"

#include "oip/constants.hpp"
#include "oip/errors.hpp"

#include <cmath>
#include <fmt/format.h>

namespace oip {

namespace {

// Air-filled line impedance for normalized width u = w / h.
double z0_air(double u) {
    const double fu = 6.0 + (2.0 * kPi - 6.0) * std::exp(-std::pow(30.666 / u, 0.7528));
    return kFreeSpaceImpedance / (2.0 * kPi) * std::log(fu / u + std::sqrt(1.0 + 4.0 / (u * u)));
}

double eps_eff_static(double u, double eps_r) {
    const double u4 = u * u * u * u;
    const double a = 1.0 + std::log((u4 + std::pow(u / 52.0, 2)) / (u4 + 0.432)) / 49.0 +
                     std::log(1.0 + std::pow(u / 18.1, 3)) / 18.7;
    const double b = 0.564 * std::pow((eps_r - 0.9) / (eps_r + 3.0), 0.053);
    return 0.5 * (eps_r + 1.0) + 0.5 * (eps_r - 1.0) * std::pow(1.0 + 10.0 / u, -a * b);
}

LineCharacteristics analyze_normalized(double u, double t_over_h, double eps_r) {
    if (t_over_h <= 0.0) {
        const double ee = eps_eff_static(u, eps_r);
        return {z0_air(u) / std::sqrt(ee), ee};
    }
    const double coth = 1.0 / std::tanh(std::sqrt(6.517 * u));
    const double du1 =
        t_over_h / kPi * std::log(1.0 + 4.0 * std::numbers::e / (t_over_h * coth * coth));
    const double dur = 0.5 * (1.0 + 1.0 / std::cosh(std::sqrt(eps_r - 1.0))) * du1;
    const double u1 = u + du1;
    const double ur = u + dur;
    const double ee_r = eps_eff_static(ur, eps_r);
    const double z_ratio = z0_air(u1) / z0_air(ur);
    return {z0_air(ur) / std::sqrt(ee_r), ee_r * z_ratio * z_ratio};
}

} // namespace

void MicrostripLine::validate() const {
    if (!(substrate_epsilon >= 1.0))
        throw InvalidArgument(fmt::format("substrate epsilon must be >= 1 (got {})", substrate_epsilon));
    if (!(substrate_height > 0.0) || !(trace_width > 0.0))
        throw InvalidArgument("substrate height and trace width must be > 0");
    if (!(copper_thickness >= 0.0) || !(physical_length >= 0.0) || !(loss_tangent >= 0.0))
        throw InvalidArgument("copper thickness, line length and loss tangent must be >= 0");
    if (!(conductor_conductivity > 0.0))
        throw InvalidArgument("conductor conductivity must be > 0");
}

LineCharacteristics microstrip_analyze(const MicrostripLine& line) {
    line.validate();
    return analyze_normalized(line.trace_width / line.substrate_height,
                              line.copper_thickness / line.substrate_height,
                              line.substrate_epsilon);
}

double microstrip_synthesize(double eps_r, double height, double target_z0,
                             double copper_thickness) {
    if (!(eps_r >= 1.0))
        throw InvalidArgument(fmt::format("substrate epsilon must be >= 1 (got {})", eps_r));
    if (!(height > 0.0))
        throw InvalidArgument("substrate height must be > 0");
    if (!(copper_thickness >= 0.0))
        throw InvalidArgument("copper thickness must be >= 0");
    if (!(target_z0 >= 10.0 && target_z0 <= 200.0))
        throw InvalidArgument(
            fmt::format("target impedance {} ohm outside the supported range [10, 200]", target_z0));

    const double t_over_h = copper_thickness / height;
    // Z0 decreases monotonically with u; bracket in log(u).
    double lo = std::log(1e-4);
    double hi = std::log(1e3);
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (analyze_normalized(std::exp(mid), t_over_h, eps_r).z0 > target_z0)
            lo = mid;
        else
            hi = mid;
    }
    const double u = std::exp(0.5 * (lo + hi));
    const double achieved = analyze_normalized(u, t_over_h, eps_r).z0;
    if (std::abs(achieved - target_z0) > 1e-3 * target_z0)
        throw NoConvergence(fmt::format(
            "microstrip synthesis reached {} ohm for target {} ohm", achieved, target_z0));
    return u * height;
}

double microstrip_attenuation(const MicrostripLine& line, const LineCharacteristics& ch,
                              double frequency) {
    const double k0 = 2.0 * kPi * frequency / kSpeedOfLight;
    double alpha_d = 0.0;
    if (line.substrate_epsilon > 1.0) {
        alpha_d = k0 * line.substrate_epsilon * (ch.eps_eff - 1.0) * line.loss_tangent /
                  (2.0 * std::sqrt(ch.eps_eff) * (line.substrate_epsilon - 1.0));
    }
    const double surface_r =
        std::sqrt(kPi * frequency * kVacuumPermeability / line.conductor_conductivity);
    const double alpha_c = surface_r / (ch.z0 * line.trace_width);
    return alpha_d + alpha_c;
}

AbcdMatrix abcd_line(const MicrostripLine& line, double frequency, bool with_losses) {
    return abcd_line(line, microstrip_analyze(line), frequency, with_losses);
}

AbcdMatrix abcd_line(const MicrostripLine& line, const LineCharacteristics& ch, double frequency,
                     bool with_losses) {
    if (!(frequency > 0.0))
        throw InvalidArgument(fmt::format("frequency must be > 0 (got {})", frequency));
    const double beta = 2.0 * kPi * frequency * std::sqrt(ch.eps_eff) / kSpeedOfLight;
    const double alpha = with_losses ? microstrip_attenuation(line, ch, frequency) : 0.0;
    const cplx gl = cplx(alpha, beta) * line.physical_length;
    const cplx ch_gl = std::cosh(gl);
    const cplx sh_gl = std::sinh(gl);
    return {ch_gl, ch.z0 * sh_gl, sh_gl / ch.z0, ch_gl};
}

} // namespace oip
