#pragma once

#include "oip/carrier_physics.hpp"
#include "oip/device_model.hpp"
#include "oip/rf_network.hpp"
#include "oip/two_port.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oip {

struct FitResult {
    EquivalentCircuit circuit; // provenance == Fitted
    double residual_rms = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    std::string note;
    std::vector<double> objective_history; // best objective per accepted simplex iteration
};

enum class FitMode {
    Complex,      // s21 and s11, magnitude and phase
    MagnitudeS21, // |s21| only; for published insertion-loss / isolation figures
};

struct FitOptions {
    FitMode mode = FitMode::Complex;
    /// When set, the model is re-simulated through these feed lines instead of treating the data
    /// as the bare element between reference planes.
    std::optional<BoardLines> embedding;
    std::size_t max_iterations = 4000;
};

inline constexpr double kMinFitCapacitance = 1e-18; // F
inline constexpr double kMinFitResistance = 1e-6;   // ohm

/// OFF-state R || C extraction by simplex descent in (log R, log C), minimising
/// sum_f |s21_model - s21_data|^2 + |s11_model - s11_data|^2 (Complex) or
/// sum_f (|s21_model| - |s21_data|)^2 (MagnitudeS21).
///
/// Start: R from the lowest-frequency closed-form inversion, C from the highest-frequency point
/// read as a pure reactance. Flat data (all points identical) short-circuits to a closed-form R
/// and C at kMinFitCapacitance. Non-convergence is reported via the flag, not an exception.
///
/// Throws InsufficientData for fewer than 2 frequency points.
FitResult fit_off_model(const TwoPortNetwork& data, const FitOptions& options = {});

/// ON-state series-R extraction: R_f = 2 Z0 (1 / |s21| - 1) per point, averaged over the band.
/// Throws NonPassiveData if any |s21| > 1, InsufficientData on an empty network.
FitResult fit_on_resistance(const TwoPortNetwork& data);

/// Series resistance seen by a matched two-port for a given insertion loss in dB.
double resistance_from_insertion_loss(double il_db, double z0 = 50.0);

/// Coupling efficiency that makes switch_element reproduce measured_resistance at laser.power.
/// Bisection on (0, 1] to 1e-9 relative agreement in R.
///
/// Throws OutOfRange (with the required coupling, which may exceed 1) when no coupling in (0, 1]
/// reaches measured_resistance, or when measured_resistance is not below the dark resistance.
double calibrate_coupling(double measured_resistance, const LaserExcitation& laser,
                          const SiliconMaterial& mat, const ChipletGeometry& chiplet,
                          std::size_t profile_points = kDefaultProfilePoints);

} // namespace oip
