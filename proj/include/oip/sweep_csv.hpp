#pragma once

#include "oip/kernels.hpp"

#include <span>
#include <string>
#include <vector>

namespace oip {

struct SweepRow {
    double power_mW = 0.0;
    double freq_GHz = 0.0;
    double il_dB = 0.0;
    double rl_dB = 0.0;
    double R_ohm = 0.0;
    double C_fF = 0.0; // 0 for a pure series resistor
};

/// Rows in power-major, frequency-minor order.
std::vector<SweepRow> sweep_rows(const PowerSweep& sweep);

/// `power_mW,freq_GHz,il_dB,rl_dB,R_ohm,C_fF` header, fixed six decimals, one row per entry.
/// An exactly matched port prints rl_dB as `inf`.
std::string write_sweep_csv(std::span<const SweepRow> rows);

} // namespace oip
