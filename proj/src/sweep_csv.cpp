#include "oip/sweep_csv.hpp"

#include "oip/errors.hpp"

#include <cmath>
#include <fmt/format.h>

namespace oip {

namespace {

std::string fixed6(double v) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    std::string s = fmt::format("{:.6f}", v);
    if (s == "-0.000000")
        s.erase(0, 1);
    return s;
}

} // namespace

std::vector<SweepRow> sweep_rows(const PowerSweep& sweep) {
    std::vector<SweepRow> rows;
    rows.reserve(sweep.points.size());
    for (std::size_t ip = 0; ip < sweep.powers.size(); ++ip) {
        const EquivalentCircuit& ec = sweep.elements[ip];
        for (std::size_t jf = 0; jf < sweep.frequencies.size(); ++jf) {
            const SParams& s = sweep.at(ip, jf);
            rows.push_back({
                sweep.powers[ip] * 1e3,
                sweep.frequencies[jf] / 1e9,
                insertion_loss_db(s),
                return_loss_db(s),
                ec.resistance,
                ec.capacitance ? *ec.capacitance * 1e15 : 0.0,
            });
        }
    }
    return rows;
}

std::string write_sweep_csv(std::span<const SweepRow> rows) {
    if (rows.empty())
        throw InvalidArgument("sweep CSV needs at least one row");
    std::string out = "power_mW,freq_GHz,il_dB,rl_dB,R_ohm,C_fF\n";
    for (const SweepRow& r : rows) {
        out += fmt::format("{},{},{},{},{},{}\n", fixed6(r.power_mW), fixed6(r.freq_GHz),
                           fixed6(r.il_dB), fixed6(r.rl_dB), fixed6(r.R_ohm), fixed6(r.C_fF));
    }
    return out;
}

} // namespace oip
