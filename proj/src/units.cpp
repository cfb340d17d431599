#include "oip/units.hpp"

#include "oip/errors.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fmt/format.h>

namespace oip {

namespace {

struct UnitEntry {
    std::string_view symbol;
    double scale;
    Dimension dimension;
};

// Exact conversion factors to SI.
constexpr std::array kUnits = {
    UnitEntry{"m", 1.0, Dimension::Length},
    UnitEntry{"cm", 1e-2, Dimension::Length},
    UnitEntry{"mm", 1e-3, Dimension::Length},
    UnitEntry{"um", 1e-6, Dimension::Length},
    UnitEntry{"µm", 1e-6, Dimension::Length},
    UnitEntry{"nm", 1e-9, Dimension::Length},
    UnitEntry{"mil", 25.4e-6, Dimension::Length},
    UnitEntry{"in", 25.4e-3, Dimension::Length},

    UnitEntry{"m^2", 1.0, Dimension::Area},
    UnitEntry{"cm^2", 1e-4, Dimension::Area},
    UnitEntry{"mm^2", 1e-6, Dimension::Area},
    UnitEntry{"um^2", 1e-12, Dimension::Area},

    UnitEntry{"1/m", 1.0, Dimension::InverseLength},
    UnitEntry{"m^-1", 1.0, Dimension::InverseLength},
    UnitEntry{"1/cm", 1e2, Dimension::InverseLength},
    UnitEntry{"cm^-1", 1e2, Dimension::InverseLength},

    UnitEntry{"s", 1.0, Dimension::Time},
    UnitEntry{"ms", 1e-3, Dimension::Time},
    UnitEntry{"us", 1e-6, Dimension::Time},
    UnitEntry{"µs", 1e-6, Dimension::Time},
    UnitEntry{"ns", 1e-9, Dimension::Time},
    UnitEntry{"ps", 1e-12, Dimension::Time},

    UnitEntry{"m/s", 1.0, Dimension::Velocity},
    UnitEntry{"cm/s", 1e-2, Dimension::Velocity},

    UnitEntry{"W", 1.0, Dimension::Power},
    UnitEntry{"mW", 1e-3, Dimension::Power},
    UnitEntry{"uW", 1e-6, Dimension::Power},

    UnitEntry{"Hz", 1.0, Dimension::Frequency},
    UnitEntry{"kHz", 1e3, Dimension::Frequency},
    UnitEntry{"MHz", 1e6, Dimension::Frequency},
    UnitEntry{"GHz", 1e9, Dimension::Frequency},

    UnitEntry{"ohm", 1.0, Dimension::Resistance},
    UnitEntry{"Ω", 1.0, Dimension::Resistance},
    UnitEntry{"kohm", 1e3, Dimension::Resistance},
    UnitEntry{"kΩ", 1e3, Dimension::Resistance},
    UnitEntry{"Mohm", 1e6, Dimension::Resistance},

    UnitEntry{"ohm·m", 1.0, Dimension::Resistivity},
    UnitEntry{"ohm*m", 1.0, Dimension::Resistivity},
    UnitEntry{"ohm-m", 1.0, Dimension::Resistivity},
    UnitEntry{"Ω·m", 1.0, Dimension::Resistivity},
    UnitEntry{"ohm·cm", 1e-2, Dimension::Resistivity},
    UnitEntry{"ohm*cm", 1e-2, Dimension::Resistivity},
    UnitEntry{"ohm-cm", 1e-2, Dimension::Resistivity},
    UnitEntry{"Ω·cm", 1e-2, Dimension::Resistivity},

    UnitEntry{"F", 1.0, Dimension::Capacitance},
    UnitEntry{"nF", 1e-9, Dimension::Capacitance},
    UnitEntry{"pF", 1e-12, Dimension::Capacitance},
    UnitEntry{"fF", 1e-15, Dimension::Capacitance},

    UnitEntry{"m^2/Vs", 1.0, Dimension::Mobility},
    UnitEntry{"m^2/(V·s)", 1.0, Dimension::Mobility},
    UnitEntry{"cm^2/Vs", 1e-4, Dimension::Mobility},
    UnitEntry{"cm^2/(V·s)", 1e-4, Dimension::Mobility},

    UnitEntry{"S/m", 1.0, Dimension::Conductivity},
    UnitEntry{"S/cm", 1e2, Dimension::Conductivity},
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

std::string_view dimension_name(Dimension d) {
    switch (d) {
    case Dimension::Dimensionless: return "dimensionless";
    case Dimension::Length: return "length";
    case Dimension::Area: return "area";
    case Dimension::InverseLength: return "inverse length";
    case Dimension::Time: return "time";
    case Dimension::Velocity: return "velocity";
    case Dimension::Power: return "power";
    case Dimension::Frequency: return "frequency";
    case Dimension::Resistance: return "resistance";
    case Dimension::Resistivity: return "resistivity";
    case Dimension::Capacitance: return "capacitance";
    case Dimension::Mobility: return "mobility";
    case Dimension::Conductivity: return "conductivity";
    }
    return "unknown";
}

double unit_scale(std::string_view unit, Dimension expected) {
    unit = trim(unit);
    if (unit.empty())
        return 1.0;
    for (const auto& entry : kUnits) {
        if (entry.symbol != unit)
            continue;
        if (entry.dimension != expected)
            throw InvalidArgument(fmt::format("unit '{}' is a {} unit, expected {}", unit,
                                              dimension_name(entry.dimension),
                                              dimension_name(expected)));
        return entry.scale;
    }
    throw InvalidArgument(fmt::format("unknown unit '{}'", unit));
}

double to_si(double value, std::string_view unit, Dimension expected) {
    return value * unit_scale(unit, expected);
}

double from_si(double si_value, std::string_view unit, Dimension expected) {
    return si_value / unit_scale(unit, expected);
}

double parse_quantity(std::string_view text, Dimension expected) {
    const std::string_view t = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr == t.data())
        throw InvalidArgument(fmt::format("'{}' does not start with a number", text));
    if (!std::isfinite(value))
        throw InvalidArgument(fmt::format("'{}' is not a finite number", text));
    const std::string_view unit = t.substr(static_cast<std::size_t>(ptr - t.data()));
    return to_si(value, unit, expected);
}

} // namespace oip
