#include "oip/circuit_fit.hpp"

#include "oip/constants.hpp"
#include "oip/errors.hpp"
#include "oip/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace oip {

namespace {

double closed_form_series_r(double s21_mag, double z0) {
    return 2.0 * z0 * (1.0 / s21_mag - 1.0);
}

bool flat_response(const TwoPortNetwork& data) {
    const SParams& ref = data.points.front();
    auto same = [](double a, double b) {
        return std::abs(a - b) <= 1e-13 * std::max(std::abs(a), std::abs(b));
    };
    return std::all_of(data.points.begin(), data.points.end(), [&](const SParams& p) {
        return same(std::abs(p.s21), std::abs(ref.s21)) &&
               same(std::abs(p.s11), std::abs(ref.s11));
    });
}

class OffModel {
public:
    OffModel(const TwoPortNetwork& data, const FitOptions& options)
        : data_(data), options_(options) {
        if (options_.embedding)
            line_ = microstrip_analyze(options_.embedding->line);
    }

    SParams predict(const EquivalentCircuit& ec, double f) const {
        if (options_.embedding)
            return switch_point(*options_.embedding, line_, ec, f);
        return element_point(ec, f, data_.reference_impedance);
    }

    double objective(double resistance, double capacitance) const {
        const auto ec = EquivalentCircuit{Topology::SeriesRparC, resistance, capacitance,
                                          Provenance::Fitted};
        double sum = 0.0;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            const SParams m = predict(ec, data_.frequencies[i]);
            const SParams& d = data_.points[i];
            if (options_.mode == FitMode::Complex) {
                sum += std::norm(m.s21 - d.s21) + std::norm(m.s11 - d.s11);
            } else {
                const double diff = std::abs(m.s21) - std::abs(d.s21);
                sum += diff * diff;
            }
        }
        return sum;
    }

private:
    const TwoPortNetwork& data_;
    const FitOptions& options_;
    LineCharacteristics line_{};
};

double unpack_resistance(double log_r) { return std::max(std::exp(log_r), kMinFitResistance); }
double unpack_capacitance(double log_c) { return std::max(std::exp(log_c), kMinFitCapacitance); }

} // namespace

double resistance_from_insertion_loss(double il_db, double z0) {
    return 2.0 * z0 * (std::pow(10.0, il_db / 20.0) - 1.0);
}

FitResult fit_off_model(const TwoPortNetwork& data, const FitOptions& options) {
    if (data.size() < 2)
        throw InsufficientData(
            fmt::format("OFF-state fit needs at least 2 frequency points (got {})", data.size()));
    data.validate();
    const double z0 = data.reference_impedance;

    FitResult result;
    if (flat_response(data)) {
        const double s21 = std::abs(data.points.front().s21);
        if (!(s21 > 0.0) || s21 > 1.0 + 1e-12)
            throw NonPassiveData(fmt::format("flat data with |s21| = {} has no series-R model", s21));
        const double r = std::max(closed_form_series_r(s21, z0), kMinFitResistance);
        result.circuit = EquivalentCircuit::series_r_par_c(r, kMinFitCapacitance, Provenance::Fitted);
        result.converged = true;
        result.note = "degenerate: flat response, capacitance unidentifiable; reported at lower bound";
        const OffModel model(data, options);
        result.residual_rms = std::sqrt(model.objective(r, kMinFitCapacitance) /
                                        static_cast<double>(data.size()));
        return result;
    }

    // Data-driven start.
    const double s21_low = std::abs(data.points.front().s21);
    const double s21_high = std::abs(data.points.back().s21);
    const double r0 = s21_low > 0.0 ? std::max(closed_form_series_r(s21_low, z0), 1e-3) : 1e6;
    double c0 = 1e-15;
    if (s21_high > 0.0 && s21_high < 1.0) {
        const double reactance = 2.0 * z0 * std::sqrt(1.0 / (s21_high * s21_high) - 1.0);
        c0 = 1.0 / (2.0 * kPi * data.frequencies.back() * reactance);
    }

    const OffModel model(data, options);
    NelderMeadOptions nm;
    nm.max_iterations = options.max_iterations;
    const auto nm_result = nelder_mead(
        [&](std::span<const double> p) {
            return model.objective(unpack_resistance(p[0]), unpack_capacitance(p[1]));
        },
        {std::log(r0), std::log(c0)}, nm);

    result.circuit = EquivalentCircuit::series_r_par_c(unpack_resistance(nm_result.x[0]),
                                                       unpack_capacitance(nm_result.x[1]),
                                                       Provenance::Fitted);
    result.residual_rms = std::sqrt(nm_result.value / static_cast<double>(data.size()));
    result.iterations = nm_result.iterations;
    result.converged = nm_result.converged;
    result.objective_history = nm_result.best_history;
    if (!result.converged)
        result.note = fmt::format("not converged after {} iterations", nm_result.iterations);
    return result;
}

FitResult fit_on_resistance(const TwoPortNetwork& data) {
    if (data.size() < 1)
        throw InsufficientData("ON-state fit needs at least 1 frequency point");
    data.validate();
    const double z0 = data.reference_impedance;

    double sum = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double mag = std::abs(data.points[i].s21);
        if (mag > 1.0)
            throw NonPassiveData(fmt::format("|s21| = {} > 1 at {} Hz; data is not passive", mag,
                                             data.frequencies[i]));
        if (mag == 0.0)
            throw NonPassiveData(fmt::format("|s21| = 0 at {} Hz; no finite series resistance",
                                             data.frequencies[i]));
        sum += closed_form_series_r(mag, z0);
    }
    const double r = std::max(0.0, sum / static_cast<double>(data.size()));

    FitResult result;
    result.circuit = EquivalentCircuit::series_r(r, Provenance::Fitted);
    const double model_mag = 2.0 * z0 / (2.0 * z0 + r);
    double sq = 0.0;
    for (const SParams& p : data.points) {
        const double d = model_mag - std::abs(p.s21);
        sq += d * d;
    }
    result.residual_rms = std::sqrt(sq / static_cast<double>(data.size()));
    result.iterations = 1;
    result.converged = true;
    return result;
}

double calibrate_coupling(double measured_resistance, const LaserExcitation& laser,
                          const SiliconMaterial& mat, const ChipletGeometry& chiplet,
                          std::size_t profile_points) {
    if (!(measured_resistance > 0.0) || !std::isfinite(measured_resistance))
        throw InvalidArgument(
            fmt::format("measured resistance must be > 0 (got {})", measured_resistance));
    if (!(laser.power > 0.0))
        throw InvalidArgument("coupling calibration needs a laser power > 0");

    const double r_dark = dark_resistance(chiplet, mat);
    if (measured_resistance >= r_dark)
        throw OutOfRange(fmt::format("measured resistance {} ohm is not below the dark resistance "
                                     "{} ohm; required coupling 0",
                                     measured_resistance, r_dark),
                         0.0);

    auto resistance_at = [&](double coupling) {
        LaserExcitation l = laser;
        l.coupling_efficiency = coupling;
        return switch_element(chiplet, l, mat, profile_points).resistance;
    };

    const double r_full = resistance_at(1.0);
    if (measured_resistance < r_full) {
        // Photo-conductance is linear in coupling; report what would be required.
        auto sheet = [&](double r) {
            return chiplet.gap_length / (chiplet.width * (r - 2.0 * chiplet.contact_resistance));
        };
        const double g_dark = sheet(r_dark);
        const double required = measured_resistance > 2.0 * chiplet.contact_resistance
                                    ? (sheet(measured_resistance) - g_dark) / (sheet(r_full) - g_dark)
                                    : HUGE_VAL;
        throw OutOfRange(fmt::format("measured resistance {} ohm is below the full-coupling model "
                                     "value {} ohm; required coupling {}",
                                     measured_resistance, r_full, required),
                         required);
    }

    // R(coupling) decreases monotonically; lo side is too resistive, hi side not resistive enough.
    double lo = 0.0;
    double hi = 1.0;
    double mid = 1.0;
    if (std::abs(r_full - measured_resistance) <= 1e-9 * measured_resistance)
        return 1.0;
    for (int i = 0; i < 200; ++i) {
        mid = 0.5 * (lo + hi);
        const double r = resistance_at(mid);
        if (std::abs(r - measured_resistance) <= 1e-9 * measured_resistance)
            break;
        if (r > measured_resistance)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-16 * hi)
            break;
    }
    return mid;
}

} // namespace oip
