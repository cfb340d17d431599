#pragma once

namespace oip {

/// Complete elliptic integral of the first kind K(k), modulus convention (not parameter m = k^2),
/// via the arithmetic-geometric mean: K(k) = pi / (2 AGM(1, sqrt(1 - k^2))). Requires 0 <= k < 1.
double elliptic_k(double k);

/// K(k') / K(k) with k' = sqrt(1 - k^2); the conformal-mapping ratio of coplanar strips.
/// Computes k' directly from k for small k to avoid cancellation.
double elliptic_k_ratio(double k);

} // namespace oip
