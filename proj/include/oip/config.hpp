#pragma once

#include "oip/carrier_physics.hpp"
#include "oip/device_model.hpp"
#include "oip/rf_network.hpp"
#include "oip/touchstone.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oip {

struct LaserConfig {
    std::vector<double> powers; // W, sweep order as given
    double wavelength = 0.0;    // m
    double spot_diameter = 0.0; // m
    double coupling_efficiency = 1.0;

    /// Excitation at one power; spot area is pi d^2 / 4.
    LaserExcitation excitation(double power) const;
};

/// Reference measurement used to calibrate the coupling efficiency.
struct CalibrationConfig {
    double power = 0.0;      // W
    double resistance = 0.0; // ohm, given directly or derived from an insertion loss
};

struct SweepConfig {
    double start = 1e9; // Hz
    double stop = 4e9;  // Hz
    std::size_t points = 31;

    std::vector<double> grid() const;
};

struct OutputConfig {
    std::string directory = "out";
    TouchstoneFormat touchstone_format = TouchstoneFormat::DB;
    std::size_t profile_points = kDefaultProfilePoints;
};

struct RunConfig {
    LaserConfig laser;
    SiliconMaterial material;
    ChipletGeometry chiplet;
    std::optional<double> resistance_override; // ohm; replaces the forward-modelled R
    BoardLines board;
    SweepConfig sweep;
    OutputConfig output;
    std::optional<CalibrationConfig> calibration;
};

namespace defaults {

/// High-resistivity n-type silicon at 915 nm.
SiliconMaterial material();
/// 3.075 mm x 500 um x 200 um die with a 75 um gap.
ChipletGeometry chiplet();
/// 30 mil eps_r 3.45 board, 17.5 um copper, 15 mm lossless feeds; width synthesized for 50 ohm.
BoardLines board();

} // namespace defaults

/// Parses a JSON configuration document. Quantities are numbers in SI or strings carrying a unit
/// suffix ("915 nm", "30 mil", "3000 ohm·cm"). Unknown keys and missing required keys raise
/// ConfigError naming the dotted key path.
RunConfig load_config(std::string_view text);

RunConfig load_config_file(const std::string& path);

} // namespace oip
