#pragma once

#include <string>
#include <string_view>

namespace oip {

enum class Dimension {
    Dimensionless,
    Length,
    Area,
    InverseLength,
    Time,
    Velocity,
    Power,
    Frequency,
    Resistance,
    Resistivity,
    Capacitance,
    Mobility,
    Conductivity,
};

std::string_view dimension_name(Dimension d);

/// Multiplier taking a value in `unit` to SI. Throws InvalidArgument for unknown units or a unit
/// of the wrong dimension. The empty unit is SI.
double unit_scale(std::string_view unit, Dimension expected);

double to_si(double value, std::string_view unit, Dimension expected);
double from_si(double si_value, std::string_view unit, Dimension expected);

/// Parses "<number>[ ]<unit>" such as "30 mil", "915nm" or "3000 ohm·cm" into SI.
double parse_quantity(std::string_view text, Dimension expected);

} // namespace oip
