#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace oip::cli {

/// Environment variable that, when set and non-empty, replaces every command's output directory.
inline constexpr const char* kOutputDirEnv = "OIP_OUTPUT_DIR";

enum ExitCode : int {
    kSuccess = 0,
    kInputError = 1,   // bad input or a physics/module error
    kNotConverged = 2, // fit ran but did not converge; report still written
};

struct CommandOutcome {
    int exit_code = kSuccess;
    std::vector<std::string> artifacts_written;
    std::vector<std::string> summary;
};

/// One .s2p per laser power plus summary.csv; prints dark R and forward R(P).
CommandOutcome cmd_simulate(const std::string& config_path);

/// sweep.csv over the (power, frequency) grid; verifies IL is non-increasing in power.
CommandOutcome cmd_sweep(const std::string& config_path);

enum class FitTopology { Off, On };

struct FitCommandOptions {
    FitTopology topology = FitTopology::Off;
    bool magnitude_only = false;
    std::size_t max_iterations = 4000;
    std::string output_dir = "out";
};

/// Extracts the equivalent circuit from a Touchstone file and writes <stem>.fit.json.
CommandOutcome cmd_fit(const std::string& s2p_path, const FitCommandOptions& options);

/// Width for a target impedance; height accepts a unit suffix ("30 mil") or plain metres.
CommandOutcome cmd_synth_line(double epsilon, const std::string& height, double z0);

/// profile_<P>mW.csv with z_um, n_per_cm3, sigma_S_per_m for each configured power.
CommandOutcome cmd_profile(const std::string& config_path);

/// The configured directory, or the value of OIP_OUTPUT_DIR when set.
std::string resolve_output_dir(const std::string& configured);

} // namespace oip::cli
