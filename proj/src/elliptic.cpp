#include "oip/elliptic.hpp"

#include "oip/constants.hpp"
#include "oip/errors.hpp"

#include <cmath>

namespace oip {

namespace {

double agm(double a, double b) {
    for (int i = 0; i < 64; ++i) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        if (std::abs(an - bn) <= 1e-16 * an)
            return an;
        a = an;
        b = bn;
    }
    return 0.5 * (a + b);
}

// K from the complementary modulus kc = sqrt(1 - k^2) so callers can pass an accurate kc.
double elliptic_k_from_complement(double kc) { return kPi / (2.0 * agm(1.0, kc)); }

} // namespace

double elliptic_k(double k) {
    if (!(k >= 0.0 && k < 1.0))
        throw InvalidArgument("elliptic_k: modulus must lie in [0, 1)");
    return elliptic_k_from_complement(std::sqrt((1.0 - k) * (1.0 + k)));
}

double elliptic_k_ratio(double k) {
    if (!(k > 0.0 && k < 1.0))
        throw InvalidArgument("elliptic_k_ratio: modulus must lie in (0, 1)");
    const double kc = std::sqrt((1.0 - k) * (1.0 + k));
    // K(kc) takes complement sqrt(1 - kc^2) = k.
    return elliptic_k_from_complement(k) / elliptic_k_from_complement(kc);
}

} // namespace oip
