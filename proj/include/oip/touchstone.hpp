#pragma once

#include "oip/two_port.hpp"

#include <string>
#include <string_view>

namespace oip {

enum class TouchstoneFormat { RI, MA, DB };

std::string_view format_name(TouchstoneFormat f);
TouchstoneFormat parse_format_name(std::string_view name); // case-insensitive

/// Touchstone v1 two-port document: option line `# GHz S <FMT> R <Z0>` then one row per frequency
/// (f, s11, s21, s12, s22 pairs). Numbers use the shortest round-trip representation.
std::string write_touchstone(const TwoPortNetwork& net, TouchstoneFormat format);

/// Parses a Touchstone v1 two-port document. A missing option line means `# GHz S MA R 50`.
/// Throws ParseError (with line number) on malformed content and NonMonotoneFrequency when the
/// frequencies are not strictly increasing.
TwoPortNetwork read_touchstone(std::string_view text);

} // namespace oip
