#include "oip/config.hpp"

#include "oip/circuit_fit.hpp"
#include "oip/constants.hpp"
#include "oip/errors.hpp"
#include "oip/units.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

namespace oip {

using nlohmann::json;

namespace defaults {

SiliconMaterial material() {
    SiliconMaterial m;
    m.quantum_efficiency = 0.9;
    m.absorption_coefficient = 3.3e4;
    m.carrier_lifetime = 25e-6;
    m.diffusion_length = 212e-6;
    m.surface_velocity = 1.0;
    m.surface_reflectance = 0.3;
    m.electron_mobility = 0.135;
    m.hole_mobility = 0.048;
    m.dark_resistivity = 30.0;
    return m;
}

ChipletGeometry chiplet() {
    ChipletGeometry c;
    c.gap_length = 75e-6;
    c.width = 500e-6;
    c.thickness = 200e-6;
    c.length = 3.075e-3;
    c.silicon_permittivity = 11.7;
    c.contact_resistance = 0.0;
    return c;
}

BoardLines board() {
    BoardLines b;
    b.line.substrate_epsilon = 3.45;
    b.line.substrate_height = 30 * 25.4e-6;
    b.line.copper_thickness = 17.5e-6;
    b.line.physical_length = 15e-3;
    b.line.loss_tangent = 0.0013;
    b.line.conductor_conductivity = 5.8e7;
    b.losses_enabled = false;
    b.reference_impedance = 50.0;
    b.line.trace_width = microstrip_synthesize(b.line.substrate_epsilon, b.line.substrate_height,
                                               b.reference_impedance, b.line.copper_thickness);
    return b;
}

} // namespace defaults

LaserExcitation LaserConfig::excitation(double power) const {
    LaserExcitation l;
    l.power = power;
    l.wavelength = wavelength;
    l.spot_area = 0.25 * kPi * spot_diameter * spot_diameter;
    l.coupling_efficiency = coupling_efficiency;
    return l;
}

std::vector<double> SweepConfig::grid() const { return linear_frequency_grid(start, stop, points); }

namespace {

std::string join(const std::string& parent, const std::string& key) {
    return parent.empty() ? key : parent + "." + key;
}

// Reads one JSON object, tracking consumed keys so leftovers can be rejected.
class ObjectReader {
public:
    ObjectReader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
        if (!obj_.is_object())
            throw ConfigError(path_.empty() ? "<document>" : path_, "expected an object");
    }

    bool has(const std::string& key) const { return obj_.contains(key); }

    const json& raw(const std::string& key) {
        seen_.insert(key);
        return obj_.at(key);
    }

    std::string path(const std::string& key) const { return join(path_, key); }

    double quantity(const std::string& key, Dimension dim) {
        if (!has(key))
            throw ConfigError(path(key), "missing required key");
        return to_quantity(raw(key), path(key), dim);
    }

    double quantity(const std::string& key, Dimension dim, double fallback) {
        return has(key) ? quantity(key, dim) : fallback;
    }

    std::optional<double> optional_quantity(const std::string& key, Dimension dim) {
        if (!has(key) || obj_.at(key).is_null()) {
            if (has(key))
                seen_.insert(key);
            return std::nullopt;
        }
        return quantity(key, dim);
    }

    std::size_t count(const std::string& key, std::size_t fallback) {
        if (!has(key))
            return fallback;
        const json& v = raw(key);
        if (!v.is_number_unsigned())
            throw ConfigError(path(key), "expected a non-negative integer");
        return v.get<std::size_t>();
    }

    bool flag(const std::string& key, bool fallback) {
        if (!has(key))
            return fallback;
        const json& v = raw(key);
        if (!v.is_boolean())
            throw ConfigError(path(key), "expected true or false");
        return v.get<bool>();
    }

    std::string text(const std::string& key, std::string fallback) {
        if (!has(key))
            return fallback;
        const json& v = raw(key);
        if (!v.is_string())
            throw ConfigError(path(key), "expected a string");
        return v.get<std::string>();
    }

    ObjectReader child(const std::string& key) { return ObjectReader(raw(key), path(key)); }

    void finish() const {
        for (const auto& [key, value] : obj_.items()) {
            if (!seen_.count(key))
                throw ConfigError(path(key), "unknown key");
        }
    }

    static double to_quantity(const json& v, const std::string& path, Dimension dim) {
        try {
            if (v.is_number())
                return v.get<double>();
            if (v.is_string())
                return parse_quantity(v.get<std::string>(), dim);
        } catch (const InvalidArgument& e) {
            throw ConfigError(path, e.what());
        }
        throw ConfigError(path, "expected a number or a quantity string such as \"915 nm\"");
    }

private:
    const json& obj_;
    std::string path_;
    std::set<std::string> seen_;
};

template <typename Fn>
void checked(const std::string& path, Fn&& fn) {
    try {
        fn();
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(path, e.what());
    }
}

LaserConfig read_laser(ObjectReader r) {
    LaserConfig laser;
    const bool has_list = r.has("powers");
    const bool has_range = r.has("power_range");
    if (has_list && has_range)
        throw ConfigError(r.path("powers"), "give either powers or power_range, not both");
    if (has_list) {
        const json& list = r.raw("powers");
        if (!list.is_array())
            throw ConfigError(r.path("powers"), "expected a list of powers");
        for (std::size_t i = 0; i < list.size(); ++i)
            laser.powers.push_back(ObjectReader::to_quantity(
                list[i], r.path("powers") + "[" + std::to_string(i) + "]", Dimension::Power));
    } else if (has_range) {
        ObjectReader range = r.child("power_range");
        const double start = range.quantity("start", Dimension::Power);
        const double stop = range.quantity("stop", Dimension::Power);
        const std::size_t points = range.count("points", 2);
        range.finish();
        if (points < 2 || !(stop > start))
            throw ConfigError(r.path("power_range"), "needs start < stop and points >= 2");
        for (std::size_t i = 0; i < points; ++i)
            laser.powers.push_back(start + (stop - start) * static_cast<double>(i) /
                                               static_cast<double>(points - 1));
    } else {
        throw ConfigError(r.path("powers"), "missing required key");
    }
    if (laser.powers.empty())
        throw ConfigError(r.path("powers"), "power list is empty");

    laser.wavelength = r.quantity("wavelength", Dimension::Length);
    laser.spot_diameter = r.quantity("spot_diameter", Dimension::Length, 100e-6);
    laser.coupling_efficiency = r.quantity("coupling_efficiency", Dimension::Dimensionless, 1.0);
    r.finish();

    for (std::size_t i = 0; i < laser.powers.size(); ++i)
        checked(r.path("powers") + "[" + std::to_string(i) + "]",
                [&] { laser.excitation(laser.powers[i]).validate(); });
    return laser;
}

SiliconMaterial read_material(ObjectReader r) {
    SiliconMaterial m = defaults::material();
    m.quantum_efficiency = r.quantity("quantum_efficiency", Dimension::Dimensionless, m.quantum_efficiency);
    m.absorption_coefficient =
        r.quantity("absorption_coefficient", Dimension::InverseLength, m.absorption_coefficient);
    m.carrier_lifetime = r.quantity("carrier_lifetime", Dimension::Time, m.carrier_lifetime);
    m.diffusion_length = r.quantity("diffusion_length", Dimension::Length, m.diffusion_length);
    m.surface_velocity = r.quantity("surface_velocity", Dimension::Velocity, m.surface_velocity);
    m.surface_reflectance =
        r.quantity("surface_reflectance", Dimension::Dimensionless, m.surface_reflectance);
    m.electron_mobility = r.quantity("electron_mobility", Dimension::Mobility, m.electron_mobility);
    m.hole_mobility = r.quantity("hole_mobility", Dimension::Mobility, m.hole_mobility);
    m.dark_resistivity = r.quantity("dark_resistivity", Dimension::Resistivity, m.dark_resistivity);
    r.finish();
    return m;
}

ChipletGeometry read_chiplet(ObjectReader r, std::optional<double>& resistance_override) {
    ChipletGeometry c = defaults::chiplet();
    c.gap_length = r.quantity("gap_length", Dimension::Length, c.gap_length);
    c.width = r.quantity("width", Dimension::Length, c.width);
    c.thickness = r.quantity("thickness", Dimension::Length, c.thickness);
    c.length = r.quantity("length", Dimension::Length, c.length);
    c.silicon_permittivity =
        r.quantity("silicon_permittivity", Dimension::Dimensionless, c.silicon_permittivity);
    c.contact_resistance = r.quantity("contact_resistance", Dimension::Resistance, c.contact_resistance);
    c.gap_capacitance_override = r.optional_quantity("gap_capacitance_override", Dimension::Capacitance);
    resistance_override = r.optional_quantity("resistance_override", Dimension::Resistance);
    r.finish();
    if (resistance_override && !(*resistance_override >= 0.0))
        throw ConfigError(r.path("resistance_override"), "must be >= 0");
    return c;
}

BoardLines read_board(ObjectReader r) {
    BoardLines b = defaults::board();
    b.line.substrate_epsilon =
        r.quantity("substrate_epsilon", Dimension::Dimensionless, b.line.substrate_epsilon);
    b.line.substrate_height = r.quantity("substrate_height", Dimension::Length, b.line.substrate_height);
    b.line.copper_thickness = r.quantity("copper_thickness", Dimension::Length, b.line.copper_thickness);
    b.line.physical_length = r.quantity("line_length", Dimension::Length, b.line.physical_length);
    b.line.loss_tangent = r.quantity("loss_tangent", Dimension::Dimensionless, b.line.loss_tangent);
    b.line.conductor_conductivity =
        r.quantity("conductor_conductivity", Dimension::Conductivity, b.line.conductor_conductivity);
    b.losses_enabled = r.flag("losses", b.losses_enabled);
    b.reference_impedance =
        r.quantity("reference_impedance", Dimension::Resistance, b.reference_impedance);
    const std::optional<double> width = r.optional_quantity("trace_width", Dimension::Length);
    r.finish();
    checked(r.path("trace_width"), [&] {
        b.line.trace_width = width ? *width
                                   : microstrip_synthesize(b.line.substrate_epsilon,
                                                           b.line.substrate_height,
                                                           b.reference_impedance,
                                                           b.line.copper_thickness);
    });
    return b;
}

SweepConfig read_sweep(ObjectReader r) {
    SweepConfig s;
    s.start = r.quantity("start", Dimension::Frequency, s.start);
    s.stop = r.quantity("stop", Dimension::Frequency, s.stop);
    s.points = r.count("points", s.points);
    r.finish();
    if (!(s.start > 0.0) || !(s.stop > s.start))
        throw ConfigError(r.path("start"), "frequency sweep needs 0 < start < stop");
    if (s.points < 2)
        throw ConfigError(r.path("points"), "frequency sweep needs at least 2 points");
    return s;
}

OutputConfig read_output(ObjectReader r) {
    OutputConfig o;
    o.directory = r.text("directory", o.directory);
    checked(r.path("touchstone_format"), [&] {
        o.touchstone_format =
            parse_format_name(r.text("touchstone_format", std::string(format_name(o.touchstone_format))));
    });
    o.profile_points = r.count("profile_points", o.profile_points);
    r.finish();
    if (o.directory.empty())
        throw ConfigError(r.path("directory"), "must not be empty");
    if (o.profile_points < 2)
        throw ConfigError(r.path("profile_points"), "needs at least 2 points");
    return o;
}

CalibrationConfig read_calibration(ObjectReader r, double z0) {
    CalibrationConfig c;
    c.power = r.quantity("power", Dimension::Power);
    const bool has_r = r.has("resistance");
    const bool has_il = r.has("insertion_loss_dB");
    if (has_r == has_il)
        throw ConfigError(r.path("resistance"), "give exactly one of resistance or insertion_loss_dB");
    if (has_r)
        c.resistance = r.quantity("resistance", Dimension::Resistance);
    else
        c.resistance = resistance_from_insertion_loss(
            r.quantity("insertion_loss_dB", Dimension::Dimensionless), z0);
    r.finish();
    if (!(c.power > 0.0))
        throw ConfigError(r.path("power"), "must be > 0");
    if (!(c.resistance > 0.0))
        throw ConfigError(has_r ? r.path("resistance") : r.path("insertion_loss_dB"),
                          "calibration resistance must be > 0");
    return c;
}

} // namespace

RunConfig load_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end(), nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ConfigError("<document>", e.what());
    }

    ObjectReader root(doc, "");
    RunConfig cfg;
    if (!root.has("laser"))
        throw ConfigError("laser", "missing required key");
    cfg.laser = read_laser(root.child("laser"));
    cfg.material = root.has("material") ? read_material(root.child("material")) : defaults::material();
    cfg.chiplet = root.has("chiplet") ? read_chiplet(root.child("chiplet"), cfg.resistance_override)
                                      : defaults::chiplet();
    cfg.board = root.has("board") ? read_board(root.child("board")) : defaults::board();
    if (root.has("sweep"))
        cfg.sweep = read_sweep(root.child("sweep"));
    if (root.has("output"))
        cfg.output = read_output(root.child("output"));
    if (root.has("calibration"))
        cfg.calibration = read_calibration(root.child("calibration"), cfg.board.reference_impedance);
    root.finish();

    checked("material", [&] { cfg.material.validate(); });
    checked("chiplet", [&] { cfg.chiplet.validate(); });
    checked("board", [&] { cfg.board.validate(); });
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("<file>", "cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_config(ss.str());
}

} // namespace oip
