#include "oip/touchstone.hpp"

#include "oip/constants.hpp"
#include "oip/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <string>
#include <vector>

namespace oip {

namespace {

constexpr double kDbFloor = -400.0; // written for |s| == 0

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

// Shortest representation that parses back to the same double; never "-0".
std::string number(double v) {
    if (v == 0.0)
        v = 0.0;
    return fmt::format("{}", v);
}

std::string frequency_number(double ghz) {
    std::string s = number(ghz);
    if (s.find_first_of(".eEn") == std::string::npos)
        s += ".0";
    return s;
}

std::array<double, 2> encode(cplx s, TouchstoneFormat format) {
    switch (format) {
    case TouchstoneFormat::RI:
        return {s.real(), s.imag()};
    case TouchstoneFormat::MA:
        return {std::abs(s), std::arg(s) * 180.0 / kPi};
    case TouchstoneFormat::DB: {
        const double mag = std::abs(s);
        return {mag > 0.0 ? 20.0 * std::log10(mag) : kDbFloor, std::arg(s) * 180.0 / kPi};
    }
    }
    return {0.0, 0.0};
}

cplx decode(double x, double y, TouchstoneFormat format) {
    switch (format) {
    case TouchstoneFormat::RI:
        return {x, y};
    case TouchstoneFormat::MA:
        return std::polar(x, y * kPi / 180.0);
    case TouchstoneFormat::DB:
        return std::polar(std::pow(10.0, x / 20.0), y * kPi / 180.0);
    }
    return {};
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

double parse_number(std::string_view tok, std::size_t line_no) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v))
        throw ParseError(line_no, fmt::format("'{}' is not a number", tok));
    return v;
}

struct Options {
    double frequency_scale = 1e9;
    TouchstoneFormat format = TouchstoneFormat::MA;
    double z0 = 50.0;
};

Options parse_options(const std::vector<std::string_view>& toks, std::size_t line_no) {
    Options opt;
    // toks[0] is "#"-prefixed; the hash may be glued to the first keyword.
    std::vector<std::string> words;
    for (auto t : toks)
        words.push_back(upper(t));
    if (words.front() == "#")
        words.erase(words.begin());
    else
        words.front().erase(0, 1);

    for (std::size_t i = 0; i < words.size(); ++i) {
        const std::string& w = words[i];
        if (w == "HZ")
            opt.frequency_scale = 1.0;
        else if (w == "KHZ")
            opt.frequency_scale = 1e3;
        else if (w == "MHZ")
            opt.frequency_scale = 1e6;
        else if (w == "GHZ")
            opt.frequency_scale = 1e9;
        else if (w == "S")
            continue;
        else if (w == "Y" || w == "Z" || w == "H" || w == "G")
            throw ParseError(line_no, fmt::format("parameter type {} is not supported, only S", w));
        else if (w == "RI" || w == "MA" || w == "DB")
            opt.format = parse_format_name(w);
        else if (w == "R") {
            if (i + 1 >= words.size())
                throw ParseError(line_no, "option 'R' is missing its impedance value");
            opt.z0 = parse_number(words[++i], line_no);
            if (!(opt.z0 > 0.0))
                throw ParseError(line_no, "reference impedance must be > 0");
        } else
            throw ParseError(line_no, fmt::format("unknown option '{}'", w));
    }
    return opt;
}

} // namespace

std::string_view format_name(TouchstoneFormat f) {
    switch (f) {
    case TouchstoneFormat::RI: return "RI";
    case TouchstoneFormat::MA: return "MA";
    case TouchstoneFormat::DB: return "DB";
    }
    return "MA";
}

TouchstoneFormat parse_format_name(std::string_view name) {
    const std::string u = upper(name);
    if (u == "RI")
        return TouchstoneFormat::RI;
    if (u == "MA")
        return TouchstoneFormat::MA;
    if (u == "DB")
        return TouchstoneFormat::DB;
    throw InvalidArgument(fmt::format("unknown Touchstone format '{}' (expected RI, MA or DB)", name));
}

std::string write_touchstone(const TwoPortNetwork& net, TouchstoneFormat format) {
    net.validate();
    std::string out = fmt::format("# GHz S {} R {}\n", format_name(format),
                                  number(net.reference_impedance));
    for (std::size_t i = 0; i < net.size(); ++i) {
        const SParams& p = net.points[i];
        out += frequency_number(net.frequencies[i] / 1e9);
        for (const cplx s : {p.s11, p.s21, p.s12, p.s22}) {
            const auto [x, y] = encode(s, format);
            out += ' ';
            out += number(x);
            out += ' ';
            out += number(y);
        }
        out += '\n';
    }
    return out;
}

TwoPortNetwork read_touchstone(std::string_view text) {
    TwoPortNetwork net;
    Options opt;
    bool have_options = false;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto bang = line.find('!'); bang != std::string_view::npos)
            line = line.substr(0, bang);
        const auto toks = tokens(line);
        if (toks.empty())
            continue;

        if (toks.front().front() == '#') {
            // Only the first option line counts.
            if (!have_options) {
                if (!net.frequencies.empty())
                    throw ParseError(line_no, "option line must precede the data");
                opt = parse_options(toks, line_no);
                have_options = true;
            }
            continue;
        }

        if (toks.size() != 9)
            throw ParseError(line_no, fmt::format("expected 9 columns for a two-port row, found {}",
                                                  toks.size()));
        std::array<double, 9> v{};
        for (std::size_t k = 0; k < 9; ++k)
            v[k] = parse_number(toks[k], line_no);

        const double f = v[0] * opt.frequency_scale;
        if (!net.frequencies.empty() && !(f > net.frequencies.back()))
            throw NonMonotoneFrequency(fmt::format(
                "line {}: frequency {} Hz does not exceed the previous {} Hz", line_no, f,
                net.frequencies.back()));
        net.frequencies.push_back(f);
        // v1 two-port column order: S11 S21 S12 S22.
        net.points.push_back({
            decode(v[1], v[2], opt.format),
            decode(v[5], v[6], opt.format),
            decode(v[3], v[4], opt.format),
            decode(v[7], v[8], opt.format),
        });
    }
    if (net.frequencies.empty())
        throw ParseError(line_no, "no frequency points found");
    net.reference_impedance = opt.z0;
    net.validate();
    return net;
}

} // namespace oip
