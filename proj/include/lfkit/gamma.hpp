#pragma once

#include <cmath>
#include <complex>

#include "lfkit/numerics.hpp"

namespace lfkit {

namespace detail {

// Lanczos coefficients, g = 7, n = 9 (Godfrey). Good to ~15 significant
// digits for Re z > 0 after the reflection below.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

}  // namespace detail

/// log(sin(pi z)) on the principal branch of each exponential piece,
/// stable for large |Im z| where sin(pi z) itself overflows.
inline cplx log_sin_pi(cplx z) {
    const cplx ipz = cplx(0.0, 1.0) * pi * z;
    if (z.imag() > 0.0) {
        // sin(pi z) = e^{-i pi z} (1 - e^{2 i pi z}) (i/2); e^{-i pi z} dominant
        return -ipz + std::log((1.0 - std::exp(2.0 * ipz)) * cplx(0.0, 0.5));
    }
    // sin(pi z) = e^{i pi z} (1 - e^{-2 i pi z}) / (2 i); e^{i pi z} dominant
    return ipz + std::log((1.0 - std::exp(-2.0 * ipz)) / cplx(0.0, 2.0));
}

/// Principal-branch log Gamma(z), z not a nonpositive integer.
inline cplx log_gamma(cplx z) {
    if (z.real() < 0.5) {
        // Reflection: log Gamma(z) = log(pi) - log sin(pi z) - log Gamma(1-z),
        // branch corrected so the result is continuous off the real axis.
        return std::log(pi) - log_sin_pi(z) - log_gamma(1.0 - z);
    }
    const cplx zm1 = z - 1.0;
    cplx acc = detail::lanczos_c[0];
    for (int k = 1; k < 9; ++k) acc += detail::lanczos_c[k] / (zm1 + static_cast<double>(k));
    const cplx t = zm1 + detail::lanczos_g + 0.5;
    return 0.5 * std::log(two_pi) + (zm1 + 0.5) * std::log(t) - t + std::log(acc);
}

inline cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

}  // namespace lfkit
