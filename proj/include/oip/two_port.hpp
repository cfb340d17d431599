#pragma once

#include <complex>
#include <vector>

namespace oip {

using cplx = std::complex<double>;

/// Chain matrix [[a, b], [c, d]]; b in ohm, c in siemens.
struct AbcdMatrix {
    cplx a{1.0, 0.0};
    cplx b{0.0, 0.0};
    cplx c{0.0, 0.0};
    cplx d{1.0, 0.0};

    cplx determinant() const { return a * d - b * c; }

    static AbcdMatrix identity() { return {}; }
};

struct SParams {
    cplx s11;
    cplx s12;
    cplx s21;
    cplx s22;
};

/// Frequency-sampled two-port S-matrix at a real reference impedance.
struct TwoPortNetwork {
    std::vector<double> frequencies; // Hz, strictly increasing, > 0
    std::vector<SParams> points;     // one per frequency
    double reference_impedance = 50.0;

    std::size_t size() const { return frequencies.size(); }

    /// Throws InvalidArgument on size mismatch or non-positive Z0, NonMonotoneFrequency when the
    /// grid is not strictly increasing and positive.
    void validate() const;
};

AbcdMatrix abcd_series(cplx impedance);
AbcdMatrix abcd_shunt(cplx admittance);

/// Matrix product x * y: x is nearer the source port.
AbcdMatrix cascade(const AbcdMatrix& x, const AbcdMatrix& y);

/// Throws SingularConversion when |a + b/Z0 + c Z0 + d| < 1e-30.
SParams abcd_to_s(const AbcdMatrix& m, double z0);

/// Inverse of abcd_to_s; throws SingularConversion when |s21| < 1e-30.
AbcdMatrix s_to_abcd(const SParams& s, double z0);

double insertion_loss_db(const SParams& s);
double return_loss_db(const SParams& s);

} // namespace oip
