#include "oip/cli/commands.hpp"

#include "oip/circuit_fit.hpp"
#include "oip/config.hpp"
#include "oip/errors.hpp"
#include "oip/kernels.hpp"
#include "oip/sweep_csv.hpp"
#include "oip/touchstone.hpp"
#include "oip/units.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace oip::cli {

namespace fs = std::filesystem;

namespace {

std::string mw_label(double power_w) {
    double mw = std::round(power_w * 1e9) / 1e6;
    if (mw == 0.0)
        mw = 0.0;
    return fmt::format("{}mW", mw);
}

std::string fixed6(double v) {
    std::string s = fmt::format("{:.6f}", v);
    if (s == "-0.000000")
        s.erase(0, 1);
    return s;
}

class ArtifactWriter {
public:
    explicit ArtifactWriter(const std::string& directory) : dir_(directory) {
        fs::create_directories(dir_);
    }

    // name is a bare file name; artifacts never leave the output directory.
    void write(const std::string& name, const std::string& content, CommandOutcome& outcome) {
        if (name.empty() || name.find('/') != std::string::npos || name == "." || name == "..")
            throw InvalidArgument(fmt::format("refusing to write artifact '{}'", name));
        const fs::path path = dir_ / name;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(fmt::format("cannot write '{}'", path.string()));
        out << content;
        outcome.artifacts_written.push_back(path.string());
    }

private:
    fs::path dir_;
};

template <typename Body>
CommandOutcome guarded(Body&& body) {
    CommandOutcome outcome;
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.exit_code = kInputError;
        outcome.summary.push_back(fmt::format("error: {}", e.what()));
    }
    return outcome;
}

// Applies the calibration block, if any, to the laser coupling.
LaserConfig effective_laser(const RunConfig& cfg, CommandOutcome& outcome) {
    LaserConfig laser = cfg.laser;
    if (cfg.calibration) {
        laser.coupling_efficiency =
            calibrate_coupling(cfg.calibration->resistance, laser.excitation(cfg.calibration->power),
                               cfg.material, cfg.chiplet, cfg.output.profile_points);
        outcome.summary.push_back(fmt::format(
            "calibrated coupling efficiency: {:.9g} (R = {:.6f} ohm at {})", laser.coupling_efficiency,
            cfg.calibration->resistance, mw_label(cfg.calibration->power)));
    }
    return laser;
}

PowerSweep run_power_sweep(const RunConfig& cfg, const LaserConfig& laser) {
    const std::vector<double> freqs = cfg.sweep.grid();
    if (!cfg.resistance_override)
        return parallel::power_sweep(cfg.board, cfg.chiplet, laser.excitation(0.0), cfg.material,
                                     laser.powers, freqs, cfg.output.profile_points);

    const double r = *cfg.resistance_override;
    const EquivalentCircuit element =
        r == 0.0 ? EquivalentCircuit::series_r(0.0)
                 : EquivalentCircuit::series_r_par_c(r, off_capacitance(cfg.chiplet));
    PowerSweep sweep;
    sweep.powers = laser.powers;
    sweep.frequencies = freqs;
    for (std::size_t i = 0; i < laser.powers.size(); ++i) {
        sweep.elements.push_back(element);
        const auto pts = parallel::frequency_sweep(cfg.board, element, freqs);
        sweep.points.insert(sweep.points.end(), pts.begin(), pts.end());
    }
    return sweep;
}

TwoPortNetwork network_at(const PowerSweep& sweep, std::size_t ip, double z0) {
    TwoPortNetwork net;
    net.frequencies = sweep.frequencies;
    net.reference_impedance = z0;
    const auto first = sweep.points.begin() + static_cast<std::ptrdiff_t>(ip * sweep.frequencies.size());
    net.points.assign(first, first + static_cast<std::ptrdiff_t>(sweep.frequencies.size()));
    return net;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(fmt::format("cannot open '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

std::string resolve_output_dir(const std::string& configured) {
    if (const char* env = std::getenv(kOutputDirEnv); env && *env)
        return env;
    return configured;
}

CommandOutcome cmd_simulate(const std::string& config_path) {
    return guarded([&](CommandOutcome& outcome) {
        const RunConfig cfg = load_config_file(config_path);
        const LaserConfig laser = effective_laser(cfg, outcome);
        ArtifactWriter writer(resolve_output_dir(cfg.output.directory));

        outcome.summary.push_back(
            fmt::format("dark resistance: {:.6f} ohm", dark_resistance(cfg.chiplet, cfg.material)));
        outcome.summary.push_back(
            fmt::format("off-state capacitance: {:.6f} fF", off_capacitance(cfg.chiplet) * 1e15));

        const PowerSweep sweep = run_power_sweep(cfg, laser);
        std::string table = "power_mW,R_ohm,C_fF,il_start_dB,il_stop_dB\n";
        for (std::size_t ip = 0; ip < sweep.powers.size(); ++ip) {
            const TwoPortNetwork net = network_at(sweep, ip, cfg.board.reference_impedance);
            writer.write(fmt::format("switch_{}.s2p", mw_label(sweep.powers[ip])),
                         write_touchstone(net, cfg.output.touchstone_format), outcome);

            const EquivalentCircuit& ec = sweep.elements[ip];
            const double c_ff = ec.capacitance ? *ec.capacitance * 1e15 : 0.0;
            const double il_start = insertion_loss_db(net.points.front());
            const double il_stop = insertion_loss_db(net.points.back());
            table += fmt::format("{},{},{},{},{}\n", fixed6(sweep.powers[ip] * 1e3),
                                 fixed6(ec.resistance), fixed6(c_ff), fixed6(il_start),
                                 fixed6(il_stop));
            outcome.summary.push_back(fmt::format(
                "P = {:>10}: R = {:.6f} ohm, |s21| = -{:.3f} dB @ {:.3f} GHz, -{:.3f} dB @ {:.3f} GHz",
                mw_label(sweep.powers[ip]), ec.resistance, il_start, sweep.frequencies.front() / 1e9,
                il_stop, sweep.frequencies.back() / 1e9));
        }
        writer.write("summary.csv", table, outcome);
    });
}

CommandOutcome cmd_sweep(const std::string& config_path) {
    return guarded([&](CommandOutcome& outcome) {
        const RunConfig cfg = load_config_file(config_path);
        const LaserConfig laser = effective_laser(cfg, outcome);
        ArtifactWriter writer(resolve_output_dir(cfg.output.directory));

        const PowerSweep sweep = run_power_sweep(cfg, laser);
        const std::vector<SweepRow> rows = sweep_rows(sweep);
        writer.write("sweep.csv", write_sweep_csv(rows), outcome);

        // IL must not rise with laser power at any frequency.
        std::vector<std::size_t> order(sweep.powers.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return sweep.powers[a] < sweep.powers[b]; });
        for (std::size_t jf = 0; jf < sweep.frequencies.size(); ++jf) {
            for (std::size_t k = 1; k < order.size(); ++k) {
                const double prev = insertion_loss_db(sweep.at(order[k - 1], jf));
                const double cur = insertion_loss_db(sweep.at(order[k], jf));
                if (cur > prev + 1e-9)
                    throw Error(fmt::format("insertion loss rises with power at {} GHz ({} -> {})",
                                            sweep.frequencies[jf] / 1e9, mw_label(sweep.powers[order[k - 1]]),
                                            mw_label(sweep.powers[order[k]])));
            }
        }
        outcome.summary.push_back(fmt::format("{} rows ({} powers x {} frequencies); IL non-increasing "
                                              "with power at every frequency",
                                              rows.size(), sweep.powers.size(), sweep.frequencies.size()));
    });
}

CommandOutcome cmd_fit(const std::string& s2p_path, const FitCommandOptions& options) {
    return guarded([&](CommandOutcome& outcome) {
        const TwoPortNetwork data = read_touchstone(read_file(s2p_path));
        FitResult fit;
        if (options.topology == FitTopology::On) {
            fit = fit_on_resistance(data);
        } else {
            FitOptions fo;
            fo.mode = options.magnitude_only ? FitMode::MagnitudeS21 : FitMode::Complex;
            fo.max_iterations = options.max_iterations;
            fit = fit_off_model(data, fo);
        }

        nlohmann::ordered_json report;
        report["source"] = fs::path(s2p_path).filename().string();
        report["topology"] = fit.circuit.topology == Topology::SeriesR ? "SeriesR" : "SeriesRparC";
        report["mode"] = options.topology == FitTopology::On ? "closed_form"
                         : options.magnitude_only           ? "magnitude_s21"
                                                            : "complex";
        report["resistance_ohm"] = fit.circuit.resistance;
        report["capacitance_F"] =
            fit.circuit.capacitance ? nlohmann::ordered_json(*fit.circuit.capacitance) : nullptr;
        report["residual_rms"] = fit.residual_rms;
        report["iterations"] = fit.iterations;
        report["converged"] = fit.converged;
        report["note"] = fit.note;
        report["points"] = data.size();

        ArtifactWriter writer(resolve_output_dir(options.output_dir));
        writer.write(fs::path(s2p_path).stem().string() + ".fit.json", report.dump(2) + "\n", outcome);

        outcome.summary.push_back(fmt::format("R = {:.6f} ohm", fit.circuit.resistance));
        if (fit.circuit.capacitance)
            outcome.summary.push_back(fmt::format("C = {:.6f} fF", *fit.circuit.capacitance * 1e15));
        outcome.summary.push_back(fmt::format("residual rms = {:.3e}, iterations = {}, converged = {}",
                                              fit.residual_rms, fit.iterations, fit.converged));
        if (!fit.note.empty())
            outcome.summary.push_back("note: " + fit.note);
        if (!fit.converged)
            outcome.exit_code = kNotConverged;
    });
}

CommandOutcome cmd_synth_line(double epsilon, const std::string& height, double z0) {
    return guarded([&](CommandOutcome& outcome) {
        const double h = parse_quantity(height, Dimension::Length);
        const double w = microstrip_synthesize(epsilon, h, z0);
        MicrostripLine line;
        line.substrate_epsilon = epsilon;
        line.substrate_height = h;
        line.trace_width = w;
        const LineCharacteristics ch = microstrip_analyze(line);
        outcome.summary.push_back(fmt::format("width: {:.6f} mm (w/h = {:.6f})", w * 1e3, w / h));
        outcome.summary.push_back(fmt::format("effective permittivity: {:.6f}", ch.eps_eff));
        outcome.summary.push_back(fmt::format("verification Z0: {:.6f} ohm", ch.z0));
    });
}

CommandOutcome cmd_profile(const std::string& config_path) {
    return guarded([&](CommandOutcome& outcome) {
        const RunConfig cfg = load_config_file(config_path);
        const LaserConfig laser = effective_laser(cfg, outcome);
        ArtifactWriter writer(resolve_output_dir(cfg.output.directory));

        const std::vector<double> depths =
            uniform_depth_grid(cfg.chiplet.thickness, cfg.output.profile_points);
        for (double power : laser.powers) {
            const std::vector<double> n = parallel::density_samples(laser.excitation(power), cfg.material, depths);
            std::string csv = "z_um,n_per_cm3,sigma_S_per_m\n";
            double n_min = n.front();
            for (std::size_t i = 0; i < depths.size(); ++i) {
                csv += fmt::format("{},{:.9e},{:.9e}\n", fixed6(depths[i] * 1e6), n[i] * 1e-6,
                                   conductivity(n[i], cfg.material));
                n_min = std::min(n_min, n[i]);
            }
            writer.write(fmt::format("profile_{}.csv", mw_label(power)), csv, outcome);
            outcome.summary.push_back(fmt::format("P = {}: n(0) = {:.4e} cm^-3, min n = {:.4e} cm^-3",
                                                  mw_label(power), n.front() * 1e-6, n_min * 1e-6));
        }
    });
}

} // namespace oip::cli
