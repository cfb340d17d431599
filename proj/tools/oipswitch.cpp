#include "oip/cli/commands.hpp"

#include <CLI11.hpp>
#include <iostream>

namespace {

int report(const oip::cli::CommandOutcome& outcome) {
    auto& stream = outcome.exit_code == oip::cli::kSuccess ? std::cout : std::cerr;
    for (const auto& line : outcome.summary)
        stream << line << '\n';
    for (const auto& path : outcome.artifacts_written)
        std::cout << "wrote " << path << '\n';
    return outcome.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optically-controlled silicon plasma switch: forward simulation and equivalent-circuit "
                 "extraction.\n\nExit codes: 0 success, 1 input or physics error, 2 fit did not converge.\n"
                 "Set OIP_OUTPUT_DIR to redirect every output file into one directory."};
    app.require_subcommand(1);

    std::string config_path;
    auto* simulate = app.add_subcommand("simulate", "Write one .s2p per laser power and summary.csv");
    simulate->add_option("config,--config", config_path, "Run configuration (JSON)")->required();

    auto* sweep = app.add_subcommand("sweep", "Write sweep.csv over the power x frequency grid");
    sweep->add_option("config,--config", config_path, "Run configuration (JSON)")->required();

    auto* profile = app.add_subcommand("profile", "Write depth profiles n(z), sigma(z) per laser power");
    profile->add_option("config,--config", config_path, "Run configuration (JSON)")->required();

    std::string s2p_path;
    std::string topology = "off";
    oip::cli::FitCommandOptions fit_options;
    auto* fit = app.add_subcommand("fit", "Extract the equivalent circuit from a Touchstone file");
    fit->add_option("s2p,--s2p", s2p_path, "Two-port Touchstone v1 file")->required();
    fit->add_option("--topology", topology, "off: R parallel C (simplex fit); on: series R (closed form)")
        ->check(CLI::IsMember({"off", "on"}))
        ->capture_default_str();
    fit->add_flag("--magnitude", fit_options.magnitude_only, "Fit |s21| only (OFF topology)");
    fit->add_option("--max-iterations", fit_options.max_iterations, "Simplex iteration limit")
        ->capture_default_str();
    fit->add_option("--output-dir", fit_options.output_dir, "Directory for the fit report")
        ->capture_default_str();

    double epsilon = 0.0;
    std::string height;
    double z0 = 50.0;
    auto* synth = app.add_subcommand("synth-line", "Microstrip width for a target impedance");
    synth->add_option("--epsilon", epsilon, "Substrate relative permittivity")->required();
    synth->add_option("--height", height, "Substrate height, e.g. \"30 mil\" or metres")->required();
    synth->add_option("--z0", z0, "Target impedance in ohm, 10..200")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (*simulate)
        return report(oip::cli::cmd_simulate(config_path));
    if (*sweep)
        return report(oip::cli::cmd_sweep(config_path));
    if (*profile)
        return report(oip::cli::cmd_profile(config_path));
    if (*fit) {
        fit_options.topology = topology == "on" ? oip::cli::FitTopology::On : oip::cli::FitTopology::Off;
        return report(oip::cli::cmd_fit(s2p_path, fit_options));
    }
    if (*synth)
        return report(oip::cli::cmd_synth_line(epsilon, height, z0));
    return 1;
}
