#include "oip/cli/commands.hpp"
#include "oip/device_model.hpp"
#include "oip/touchstone.hpp"

#include <cstdlib>
#include <doctest.h>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

using namespace oip;
using namespace oip::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("oip_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
        ::unsetenv(kOutputDirEnv);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

std::string write_config(const TempDir& dir, const std::string& laser_powers, const std::string& extra = "") {
    const std::string path = dir.file("run.json");
    spit(path, R"({
        // test run
        "laser": {"powers": [)" + laser_powers + R"(], "wavelength": "915 nm"},
        "sweep": {"start": "1 GHz", "stop": "4 GHz", "points": 7},
        "output": {"directory": ")" + dir.file("out") + R"(", "profile_points": 101})" +
                   extra + "}");
    return path;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

std::string joined(const CommandOutcome& o) {
    std::string s;
    for (const auto& line : o.summary)
        s += line + "\n";
    return s;
}

} // namespace

TEST_CASE("simulate writes one touchstone per power plus a summary") {
    TempDir dir;
    const std::string cfg = write_config(dir, R"("0 mW", "175 mW")");
    const CommandOutcome a = cmd_simulate(cfg);
    REQUIRE(a.exit_code == kSuccess);
    CHECK(fs::exists(dir.file("out/switch_0mW.s2p")));
    CHECK(fs::exists(dir.file("out/switch_175mW.s2p")));
    CHECK(fs::exists(dir.file("out/summary.csv")));
    CHECK(joined(a).find("dark resistance") != std::string::npos);

    const TwoPortNetwork dark = read_touchstone(slurp(dir.file("out/switch_0mW.s2p")));
    CHECK(dark.size() == 7);
    CHECK(insertion_loss_db(dark.points.front()) > 20.0);

    const std::string first = slurp(dir.file("out/switch_175mW.s2p"));
    const std::string summary = slurp(dir.file("out/summary.csv"));
    REQUIRE(cmd_simulate(cfg).exit_code == kSuccess);
    CHECK(slurp(dir.file("out/switch_175mW.s2p")) == first);
    CHECK(slurp(dir.file("out/summary.csv")) == summary);
}

TEST_CASE("simulate with a zero resistance override is a through") {
    TempDir dir;
    const std::string cfg = write_config(dir, R"("0 mW")", R"(, "chiplet": {"resistance_override": "0 ohm"})");
    REQUIRE(cmd_simulate(cfg).exit_code == kSuccess);
    const auto rows = csv_rows(slurp(dir.file("out/summary.csv")));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0][1] == "0.000000");
    CHECK(rows[0][3] == "0.000000");
    CHECK(rows[0][4] == "0.000000");
}

TEST_CASE("output directory environment override") {
    TempDir dir;
    const std::string cfg = write_config(dir, R"("0 mW")");
    ::setenv(kOutputDirEnv, dir.file("elsewhere").c_str(), 1);
    const CommandOutcome o = cmd_simulate(cfg);
    ::unsetenv(kOutputDirEnv);
    REQUIRE(o.exit_code == kSuccess);
    CHECK(fs::exists(dir.file("elsewhere/summary.csv")));
    CHECK_FALSE(fs::exists(dir.file("out")));
}

TEST_CASE("sweep grid is monotone in power and calibrated") {
    TempDir dir;
    const std::string cfg = write_config(dir, R"("0 mW", "175 mW", "200 mW", "1500 mW")",
                                         R"(, "calibration": {"power": "175 mW", "insertion_loss_dB": 0.84})");
    const CommandOutcome o = cmd_sweep(cfg);
    REQUIRE(o.exit_code == kSuccess);
    CHECK(joined(o).find("calibrated coupling") != std::string::npos);
    const auto rows = csv_rows(slurp(dir.file("out/sweep.csv")));
    REQUIRE(rows.size() == 28);
    for (std::size_t jf = 0; jf < 7; ++jf) {
        for (std::size_t ip = 1; ip < 4; ++ip)
            CHECK(std::stod(rows[ip * 7 + jf][2]) <= std::stod(rows[(ip - 1) * 7 + jf][2]));
        CHECK(std::stod(rows[3 * 7 + jf][2]) <= 0.33);
    }
    // 175 mW reproduces the calibration point at the low end of the band.
    CHECK(std::stod(rows[7][4]) == doctest::Approx(10.153931).epsilon(1e-6));
}

TEST_CASE("config errors exit with status 1") {
    TempDir dir;
    spit(dir.file("bad.json"), R"({"laser": {"powers": ["1 W"]}})");
    const CommandOutcome o = cmd_sweep(dir.file("bad.json"));
    CHECK(o.exit_code == kInputError);
    CHECK(joined(o).find("laser.wavelength") != std::string::npos);
    CHECK(cmd_simulate(dir.file("missing.json")).exit_code == kInputError);

    // Calibration target below what full coupling can reach.
    const std::string cfg = write_config(dir, R"("1 W")", R"(, "calibration": {"power": "1 mW", "resistance": "1 ohm"})");
    const CommandOutcome c = cmd_simulate(cfg);
    CHECK(c.exit_code == kInputError);
    CHECK(joined(c).find("error:") != std::string::npos);
}

TEST_CASE("fit recovers a synthetic OFF-state element") {
    TempDir dir;
    const auto ec = EquivalentCircuit::series_r_par_c(22.5e3, 65e-15);
    TwoPortNetwork net;
    for (int i = 0; i < 31; ++i) {
        const double f = 1e9 + 1e8 * i;
        net.frequencies.push_back(f);
        net.points.push_back(abcd_to_s(abcd_series(impedance(ec, f)), 50.0));
    }
    spit(dir.file("off.s2p"), write_touchstone(net, TouchstoneFormat::RI));
    FitCommandOptions opts;
    opts.output_dir = dir.file("fits");
    const CommandOutcome o = cmd_fit(dir.file("off.s2p"), opts);
    REQUIRE(o.exit_code == kSuccess);
    const auto report = nlohmann::json::parse(slurp(dir.file("fits/off.fit.json")));
    CHECK(report["topology"] == "SeriesRparC");
    CHECK(report["converged"] == true);
    CHECK(report["resistance_ohm"].get<double>() == doctest::Approx(22.5e3).epsilon(0.005));
    CHECK(report["capacitance_F"].get<double>() == doctest::Approx(65e-15).epsilon(0.005));

    opts.magnitude_only = true;
    REQUIRE(cmd_fit(dir.file("off.s2p"), opts).exit_code == kSuccess);
    const auto mag = nlohmann::json::parse(slurp(dir.file("fits/off.fit.json")));
    CHECK(mag["mode"] == "magnitude_s21");
    CHECK(mag["resistance_ohm"].get<double>() == doctest::Approx(22.5e3).epsilon(0.005));

    opts.magnitude_only = false;
    opts.max_iterations = 2;
    const CommandOutcome stopped = cmd_fit(dir.file("off.s2p"), opts);
    CHECK(stopped.exit_code == kNotConverged);
    CHECK(fs::exists(dir.file("fits/off.fit.json")));
}

TEST_CASE("fit of a flat ON-state file") {
    TempDir dir;
    std::string text = "# GHz S DB R 50\n";
    for (int i = 0; i < 5; ++i)
        text += std::to_string(1 + i) + " -40 0 -0.84 0 -0.84 0 -40 0\n";
    spit(dir.file("on.s2p"), text);
    FitCommandOptions opts;
    opts.topology = FitTopology::On;
    opts.output_dir = dir.file("fits");
    REQUIRE(cmd_fit(dir.file("on.s2p"), opts).exit_code == kSuccess);
    const auto report = nlohmann::json::parse(slurp(dir.file("fits/on.fit.json")));
    CHECK(report["topology"] == "SeriesR");
    CHECK(report["resistance_ohm"].get<double>() == doctest::Approx(10.15).epsilon(0.001));
    CHECK(report["capacitance_F"].is_null());

    spit(dir.file("gain.s2p"), "# GHz S MA R 50\n1 0 0 1.2 0 1.2 0 0 0\n");
    const CommandOutcome bad = cmd_fit(dir.file("gain.s2p"), opts);
    CHECK(bad.exit_code == kInputError);
    CHECK_FALSE(fs::exists(dir.file("fits/gain.fit.json")));

    spit(dir.file("short.s2p"), "# GHz S MA R 50\n1 0 0 1 0 1 0\n");
    CHECK(cmd_fit(dir.file("short.s2p"), opts).exit_code == kInputError);
}

TEST_CASE("synth-line") {
    const CommandOutcome o = cmd_synth_line(3.45, "30 mil", 50.0);
    REQUIRE(o.exit_code == kSuccess);
    CHECK(joined(o).find("width: 1.7") != std::string::npos);
    CHECK(joined(o).find("verification Z0: 50.0") != std::string::npos);
    CHECK(cmd_synth_line(3.45, "0.000762", 75.0).exit_code == kSuccess);
    CHECK(cmd_synth_line(3.45, "30 mil", 500.0).exit_code == kInputError);
    CHECK(cmd_synth_line(3.45, "30 mW", 50.0).exit_code == kInputError);
}

TEST_CASE("profile scales linearly with power") {
    TempDir dir;
    const std::string cfg = write_config(dir, R"("0 mW", "100 mW", "200 mW")");
    REQUIRE(cmd_profile(cfg).exit_code == kSuccess);
    const auto dark = csv_rows(slurp(dir.file("out/profile_0mW.csv")));
    const auto one = csv_rows(slurp(dir.file("out/profile_100mW.csv")));
    const auto two = csv_rows(slurp(dir.file("out/profile_200mW.csv")));
    REQUIRE(dark.size() == 101);
    CHECK(dark.front()[0] == "0.000000");
    CHECK(dark.back()[0] == "200.000000");
    for (std::size_t i = 0; i < dark.size(); ++i) {
        CHECK(std::stod(dark[i][1]) == 0.0);
        CHECK(std::stod(dark[i][2]) == doctest::Approx(1.0 / 30.0).epsilon(1e-9));
        CHECK(std::stod(two[i][1]) == doctest::Approx(2.0 * std::stod(one[i][1])).epsilon(1e-8));
    }
}
