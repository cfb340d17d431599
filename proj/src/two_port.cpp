#include "oip/two_port.hpp"

#include "oip/errors.hpp"

#include <cmath>
#include <fmt/format.h>

namespace oip {

namespace {

constexpr double kSingular = 1e-30;

void require_z0(double z0) {
    if (!(std::isfinite(z0) && z0 > 0.0))
        throw InvalidArgument(fmt::format("reference impedance must be > 0 (got {})", z0));
}

} // namespace

void TwoPortNetwork::validate() const {
    if (frequencies.size() != points.size())
        throw InvalidArgument("network frequency and S-parameter counts differ");
    require_z0(reference_impedance);
    for (std::size_t i = 0; i < frequencies.size(); ++i) {
        if (!(frequencies[i] > 0.0) || !std::isfinite(frequencies[i]))
            throw NonMonotoneFrequency(
                fmt::format("frequency #{} is {} Hz; frequencies must be positive", i, frequencies[i]));
        if (i > 0 && !(frequencies[i] > frequencies[i - 1]))
            throw NonMonotoneFrequency(fmt::format(
                "frequency #{} ({} Hz) does not exceed the previous one ({} Hz)", i,
                frequencies[i], frequencies[i - 1]));
    }
}

AbcdMatrix abcd_series(cplx impedance) { return {1.0, impedance, 0.0, 1.0}; }

AbcdMatrix abcd_shunt(cplx admittance) { return {1.0, 0.0, admittance, 1.0}; }

AbcdMatrix cascade(const AbcdMatrix& x, const AbcdMatrix& y) {
    return {
        x.a * y.a + x.b * y.c,
        x.a * y.b + x.b * y.d,
        x.c * y.a + x.d * y.c,
        x.c * y.b + x.d * y.d,
    };
}

SParams abcd_to_s(const AbcdMatrix& m, double z0) {
    require_z0(z0);
    const cplx bz = m.b / z0;
    const cplx cz = m.c * z0;
    const cplx den = m.a + bz + cz + m.d;
    if (std::abs(den) < kSingular)
        throw SingularConversion("ABCD to S conversion: denominator vanishes");
    return {
        (m.a + bz - cz - m.d) / den,
        2.0 * m.determinant() / den,
        2.0 / den,
        (-m.a + bz - cz + m.d) / den,
    };
}

AbcdMatrix s_to_abcd(const SParams& s, double z0) {
    require_z0(z0);
    if (std::abs(s.s21) < kSingular)
        throw SingularConversion("S to ABCD conversion: s21 vanishes");
    const cplx one{1.0, 0.0};
    const cplx twice_s21 = 2.0 * s.s21;
    const cplx cross = s.s12 * s.s21;
    return {
        ((one + s.s11) * (one - s.s22) + cross) / twice_s21,
        z0 * ((one + s.s11) * (one + s.s22) - cross) / twice_s21,
        ((one - s.s11) * (one - s.s22) - cross) / (twice_s21 * z0),
        ((one - s.s11) * (one + s.s22) + cross) / twice_s21,
    };
}

double insertion_loss_db(const SParams& s) { return -20.0 * std::log10(std::abs(s.s21)); }

double return_loss_db(const SParams& s) { return -20.0 * std::log10(std::abs(s.s11)); }

} // namespace oip
