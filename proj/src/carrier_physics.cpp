#include "oip/carrier_physics.hpp"

#include "oip/constants.hpp"
#include "oip/errors.hpp"

#include <cmath>
#include <fmt/format.h>

namespace oip {

namespace {

constexpr double kSingularThreshold = 1e-9;
constexpr double kSingularPerturbation = 1e-6;
constexpr double kNegativeTolerance = 1.0; // 1/m^3

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

// Steady-state density evaluated literally for a given diffusion length; no singularity handling.
double density_direct(double generation_scale, const SiliconMaterial& mat, double diffusion_length,
                  double z) {
    const double alpha = mat.absorption_coefficient;
    const double L = diffusion_length;
    const double vt = mat.surface_velocity * mat.carrier_lifetime;
    const double surface_ratio = (alpha * L * L + vt) / (L + vt);
    const double bracket = std::exp(-alpha * z) - surface_ratio * std::exp(-z / L);
    return generation_scale * bracket / (1.0 - alpha * alpha * L * L);
}

} // namespace

void LaserExcitation::validate() const {
    if (!(std::isfinite(power) && power >= 0.0))
        throw InvalidArgument(fmt::format("laser power must be >= 0 (got {})", power));
    if (!positive_finite(wavelength))
        throw InvalidArgument(fmt::format("laser wavelength must be > 0 (got {})", wavelength));
    if (!positive_finite(spot_area))
        throw InvalidArgument(fmt::format("laser spot area must be > 0 (got {})", spot_area));
    if (!(coupling_efficiency > 0.0 && coupling_efficiency <= 1.0))
        throw InvalidArgument(
            fmt::format("coupling efficiency must lie in (0, 1] (got {})", coupling_efficiency));
}

void SiliconMaterial::validate() const {
    struct Field {
        const char* name;
        double value;
    };
    const Field positive[] = {
        {"quantum_efficiency", quantum_efficiency},
        {"absorption_coefficient", absorption_coefficient},
        {"carrier_lifetime", carrier_lifetime},
        {"diffusion_length", diffusion_length},
        {"surface_velocity", surface_velocity},
        {"electron_mobility", electron_mobility},
        {"hole_mobility", hole_mobility},
        {"dark_resistivity", dark_resistivity},
    };
    for (const auto& f : positive) {
        if (!positive_finite(f.value))
            throw InvalidArgument(fmt::format("material {} must be > 0 (got {})", f.name, f.value));
    }
    if (!(surface_reflectance >= 0.0 && surface_reflectance < 1.0))
        throw InvalidArgument(
            fmt::format("surface reflectance must lie in [0, 1) (got {})", surface_reflectance));
}

double photon_flux(const LaserExcitation& laser) {
    laser.validate();
    return laser.coupling_efficiency * laser.power * laser.wavelength / (kPlanck * kSpeedOfLight);
}

double excess_density(const LaserExcitation& laser, const SiliconMaterial& mat, double z) {
    mat.validate();
    if (!(z >= 0.0) || !std::isfinite(z))
        throw InvalidArgument(fmt::format("depth must be >= 0 (got {})", z));

    const double flux_density = photon_flux(laser) / laser.spot_area;
    const double generation_scale = mat.quantum_efficiency * mat.absorption_coefficient *
                                    mat.carrier_lifetime * flux_density *
                                    (1.0 - mat.surface_reflectance);
    if (generation_scale == 0.0)
        return 0.0;

    const double aL2 = std::pow(mat.absorption_coefficient * mat.diffusion_length, 2);
    double n;
    if (std::abs(1.0 - aL2) < kSingularThreshold * aL2) {
        const double L = mat.diffusion_length;
        n = 0.5 * (density_direct(generation_scale, mat, L * (1.0 + kSingularPerturbation), z) +
                   density_direct(generation_scale, mat, L * (1.0 - kSingularPerturbation), z));
    } else {
        n = density_direct(generation_scale, mat, mat.diffusion_length, z);
    }

    if (n < -kNegativeTolerance || std::isnan(n))
        throw NonPhysicalProfile(
            fmt::format("carrier density {} m^-3 at z = {} m is negative; check material parameters",
                        n, z));
    return n;
}

std::vector<double> uniform_depth_grid(double thickness, std::size_t n_points) {
    if (!positive_finite(thickness))
        throw InvalidArgument(fmt::format("thickness must be > 0 (got {})", thickness));
    if (n_points < 2)
        throw InvalidArgument("profile needs at least 2 depth points");
    std::vector<double> z(n_points);
    const double last = static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i)
        z[i] = thickness * (static_cast<double>(i) / last);
    z.back() = thickness;
    return z;
}

CarrierProfile carrier_profile(const LaserExcitation& laser, const SiliconMaterial& mat,
                               double thickness, std::size_t n_points) {
    CarrierProfile profile;
    profile.depths = uniform_depth_grid(thickness, n_points);
    profile.densities.reserve(n_points);
    for (double z : profile.depths)
        profile.densities.push_back(excess_density(laser, mat, z));
    return profile;
}

double conductivity(double density, const SiliconMaterial& mat) {
    return kElementaryCharge * (mat.electron_mobility + mat.hole_mobility) * density +
           1.0 / mat.dark_resistivity;
}

std::vector<double> conductivity_profile(const CarrierProfile& profile,
                                         const SiliconMaterial& mat) {
    mat.validate();
    std::vector<double> sigma;
    sigma.reserve(profile.densities.size());
    for (double n : profile.densities)
        sigma.push_back(conductivity(n, mat));
    return sigma;
}

} // namespace oip
