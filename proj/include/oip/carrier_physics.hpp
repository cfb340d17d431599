#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace oip {

/// Optical drive of the chiplet. All quantities SI.
struct LaserExcitation {
    double power = 0.0;               // W
    double wavelength = 0.0;          // m
    double spot_area = 0.0;           // m^2
    double coupling_efficiency = 1.0; // fraction of P reaching the silicon, (0, 1]

    void validate() const;
};

struct SiliconMaterial {
    double quantum_efficiency = 0.0;     // eta
    double absorption_coefficient = 0.0; // alpha, 1/m
    double carrier_lifetime = 0.0;       // tau, s
    double diffusion_length = 0.0;       // L, m
    double surface_velocity = 0.0;       // nu_s, m/s
    double surface_reflectance = 0.0;    // R, [0, 1)
    double electron_mobility = 0.0;      // m^2/(V s)
    double hole_mobility = 0.0;          // m^2/(V s)
    double dark_resistivity = 0.0;       // ohm m

    void validate() const;
};

/// Excess carrier density sampled on a depth grid starting at the illuminated face.
struct CarrierProfile {
    std::vector<double> depths;    // m, strictly increasing, depths.front() == 0
    std::vector<double> densities; // 1/m^3
};

/// Photons per second delivered into the silicon: coupling * P * lambda / (h c).
double photon_flux(const LaserExcitation& laser);

/// Excess electron-hole density n(z) in 1/m^3 for the one-sided illuminated slab model:
///
///   n(z) = eta alpha tau (P lambda / A h c) (1 - R) / (1 - alpha^2 L^2)
///          * [exp(-alpha z) - (alpha L^2 + nu_s tau) / (L + nu_s tau) * exp(-z / L)]
///
/// where P already includes the coupling efficiency. Near alpha L = 1 the expression is a removable
/// 0/0; within |1 - alpha^2 L^2| < 1e-9 alpha^2 L^2 the value is the mean of the evaluations at
/// L (1 +- 1e-6).
///
/// Throws NonPhysicalProfile if the result is below -1 m^-3.
double excess_density(const LaserExcitation& laser, const SiliconMaterial& mat, double z);

/// Uniform depth grid on [0, thickness] with n_points samples.
std::vector<double> uniform_depth_grid(double thickness, std::size_t n_points);

CarrierProfile carrier_profile(const LaserExcitation& laser, const SiliconMaterial& mat,
                               double thickness, std::size_t n_points);

/// sigma(z) = q (mu_n + mu_p) n(z) + 1 / rho_dark, in S/m.
std::vector<double> conductivity_profile(const CarrierProfile& profile, const SiliconMaterial& mat);

/// Pointwise conductivity for a single density; shared by the profile kernels.
double conductivity(double density, const SiliconMaterial& mat);

} // namespace oip
