#include "oip/circuit_fit.hpp"
#include "oip/config.hpp"
#include "oip/errors.hpp"
#include "oip/kernels.hpp"
#include "oip/sweep_csv.hpp"
#include "oip/units.hpp"

#include <doctest.h>
#include <fmt/format.h>
#include <random>

using namespace oip;

namespace {

std::string minimal(const std::string& extra = "") {
    return R"({"laser": {"powers": ["0 mW", "175 mW"], "wavelength": "915 nm"})" + extra + "}";
}

std::string error_path(const std::string& doc) {
    try {
        load_config(doc);
    } catch (const ConfigError& e) {
        return e.key_path();
    }
    return "<no error>";
}

} // namespace

TEST_CASE("unit table") {
    CHECK(parse_quantity("30 mil", Dimension::Length) == doctest::Approx(0.000762).epsilon(1e-15));
    CHECK(parse_quantity("3000 ohm·cm", Dimension::Resistivity) == doctest::Approx(30.0).epsilon(1e-15));
    CHECK(parse_quantity("3000 ohm*cm", Dimension::Resistivity) == doctest::Approx(30.0).epsilon(1e-15));
    CHECK(parse_quantity("915nm", Dimension::Length) == doctest::Approx(915e-9).epsilon(1e-15));
    CHECK(parse_quantity("175 mW", Dimension::Power) == doctest::Approx(0.175).epsilon(1e-15));
    CHECK(parse_quantity("1.5 W", Dimension::Power) == 1.5);
    CHECK(parse_quantity("4 GHz", Dimension::Frequency) == 4e9);
    CHECK(parse_quantity("3.3e4 1/m", Dimension::InverseLength) == 3.3e4);
    CHECK(parse_quantity("330 1/cm", Dimension::InverseLength) == doctest::Approx(3.3e4));
    CHECK(parse_quantity("25 us", Dimension::Time) == doctest::Approx(25e-6).epsilon(1e-15));
    CHECK(parse_quantity("1350 cm^2/Vs", Dimension::Mobility) == doctest::Approx(0.135).epsilon(1e-15));
    CHECK(parse_quantity("0.3", Dimension::Dimensionless) == 0.3);

    CHECK_THROWS_AS(parse_quantity("30 mW", Dimension::Length), InvalidArgument);
    CHECK_THROWS_AS(parse_quantity("30 furlongs", Dimension::Length), InvalidArgument);
    CHECK_THROWS_AS(parse_quantity("mil", Dimension::Length), InvalidArgument);
}

TEST_CASE("unit conversions round trip to 12 significant digits") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> mant(1.0, 10.0);
    std::uniform_int_distribution<int> expo(-6, 6);
    const std::pair<const char*, Dimension> units[] = {
        {"nm", Dimension::Length},    {"um", Dimension::Length},          {"mil", Dimension::Length},
        {"mm", Dimension::Length},    {"mW", Dimension::Power},           {"GHz", Dimension::Frequency},
        {"ohm·cm", Dimension::Resistivity}, {"fF", Dimension::Capacitance}, {"cm^2/Vs", Dimension::Mobility},
    };
    for (const auto& [unit, dim] : units) {
        for (int i = 0; i < 200; ++i) {
            const double v = mant(rng) * std::pow(10.0, expo(rng));
            const double back = from_si(to_si(v, unit, dim), unit, dim);
            CHECK(fmt::format("{:.11e}", back) == fmt::format("{:.11e}", v));
        }
    }
}

TEST_CASE("config defaults and conversions") {
    const RunConfig cfg = load_config(minimal(R"(,
        "material": {"dark_resistivity": "3000 ohm·cm"},
        "board": {"substrate_height": "30 mil"})"));
    REQUIRE(cfg.laser.powers.size() == 2);
    CHECK(cfg.laser.powers[0] == 0.0);
    CHECK(cfg.laser.powers[1] == doctest::Approx(0.175).epsilon(1e-15));
    CHECK(cfg.laser.wavelength == doctest::Approx(915e-9));
    CHECK(cfg.laser.spot_diameter == doctest::Approx(100e-6));
    CHECK(cfg.material.dark_resistivity == doctest::Approx(30.0).epsilon(1e-15));
    CHECK(cfg.board.line.substrate_height == doctest::Approx(0.000762).epsilon(1e-15));
    CHECK(cfg.board.line.trace_width / cfg.board.line.substrate_height == doctest::Approx(2.2).epsilon(0.05));
    CHECK(microstrip_analyze(cfg.board.line).z0 == doctest::Approx(50.0).epsilon(1e-6));
    CHECK(cfg.sweep.grid().size() == 31);
    CHECK(cfg.output.touchstone_format == TouchstoneFormat::DB);
    CHECK_FALSE(cfg.calibration);
    CHECK(cfg.laser.excitation(1.0).spot_area == doctest::Approx(3.141592653589793 * 50e-6 * 50e-6));
}

TEST_CASE("config errors name the key path") {
    CHECK(error_path(R"({"laser": {"powers": ["1 W"]}})") == "laser.wavelength");
    CHECK(error_path(R"({"laser": {"powers": [], "wavelength": "915 nm"}})") == "laser.powers");
    CHECK(error_path(R"({"laser": {"wavelength": "915 nm"}})") == "laser.powers");
    CHECK(error_path(R"({})") == "laser");
    CHECK(error_path(minimal(R"(, "material": {"absorbtion": 1})")) == "material.absorbtion");
    CHECK(error_path(minimal(R"(, "colour": "blue")")) == "colour");
    CHECK(error_path(minimal(R"(, "board": {"substrate_height": "30 mW"})")) == "board.substrate_height");
    CHECK(error_path(minimal(R"(, "sweep": {"start": "4 GHz", "stop": "1 GHz"})")) == "sweep.start");
    CHECK(error_path(R"({"laser": {"powers": ["-1 W"], "wavelength": "915 nm"}})") == "laser.powers[0]");
    CHECK(error_path(minimal(R"(, "material": {"surface_reflectance": 1.2})")) == "material");
    CHECK(error_path("{not json") == "<document>");
}

TEST_CASE("power range, overrides and calibration") {
    const RunConfig cfg = load_config(R"({
        "laser": {"power_range": {"start": "0 W", "stop": "1.5 W", "points": 16}, "wavelength": 915e-9},
        "chiplet": {"gap_capacitance_override": "65 fF", "resistance_override": "0 ohm"},
        "calibration": {"power": "175 mW", "insertion_loss_dB": 0.84},
        "output": {"directory": "runs", "touchstone_format": "ri", "profile_points": 101}
    })");
    REQUIRE(cfg.laser.powers.size() == 16);
    CHECK(cfg.laser.powers.back() == 1.5);
    CHECK(*cfg.chiplet.gap_capacitance_override == doctest::Approx(65e-15));
    CHECK(*cfg.resistance_override == 0.0);
    REQUIRE(cfg.calibration);
    CHECK(cfg.calibration->resistance == doctest::Approx(10.153930954141499).epsilon(1e-12));
    CHECK(cfg.output.touchstone_format == TouchstoneFormat::RI);
    CHECK(cfg.output.directory == "runs");
}

TEST_CASE("sweep CSV") {
    const BoardLines board = defaults::board();
    PowerSweep sweep;
    sweep.powers = {0.0};
    sweep.frequencies = {1e9};
    sweep.elements = {EquivalentCircuit::series_r(0.0)};
    sweep.points = {SParams{0.0, 1.0, 1.0, 0.0}};
    const std::string csv = write_sweep_csv(sweep_rows(sweep));
    CHECK(csv == "power_mW,freq_GHz,il_dB,rl_dB,R_ohm,C_fF\n"
                 "0.000000,1.000000,0.000000,inf,0.000000,0.000000\n");
    CHECK_THROWS_AS(write_sweep_csv({}), InvalidArgument);

    // Calibrated at 175 mW / 0.84 dB, the 1500 mW rows sit below 0.33 dB.
    const ChipletGeometry chiplet = defaults::chiplet();
    const SiliconMaterial mat = defaults::material();
    LaserConfig laser;
    laser.wavelength = 915e-9;
    laser.spot_diameter = 100e-6;
    laser.coupling_efficiency =
        calibrate_coupling(resistance_from_insertion_loss(0.84), laser.excitation(0.175), mat, chiplet);
    const std::vector<double> powers{0.0, 0.175, 0.2, 1.5};
    const std::vector<double> freqs = linear_frequency_grid(1e9, 4e9, 7);
    const auto rows = sweep_rows(parallel::power_sweep(board, chiplet, laser.excitation(0.0), mat, powers, freqs));
    REQUIRE(rows.size() == 28);
    CHECK(rows[0].power_mW == 0.0);
    CHECK(rows[7].power_mW == doctest::Approx(175.0));
    CHECK(rows[1].freq_GHz == doctest::Approx(1.5));
    for (std::size_t i = 21; i < 28; ++i)
        CHECK(rows[i].il_dB <= 0.33);
    const std::string a = write_sweep_csv(rows);
    const std::string b = write_sweep_csv(sweep_rows(parallel::power_sweep(board, chiplet, laser.excitation(0.0), mat, powers, freqs)));
    CHECK(a == b);
}
