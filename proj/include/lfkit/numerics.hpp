#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>

namespace lfkit {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;

inline bool finite(const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Principal-branch phase difference arg(b/a) without forming the quotient.
inline double phase_step(const cplx& a, const cplx& b) {
    return std::arg(b * std::conj(a));
}

// Real inner product of a, b viewed as vectors in R^2.
inline double dot2(const cplx& a, const cplx& b) {
    return a.real() * b.real() + a.imag() * b.imag();
}

inline cplx unit(const cplx& z) {
    double m = std::abs(z);
    return m > 0.0 ? z / m : cplx(0.0, 0.0);
}

// Deterministic low-discrepancy jitter sequence in (0,1), used when a
// contour has to be nudged off a zero. Index-addressable so reruns are
// byte-identical.
inline double jitter_unit(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
    x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27; x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace lfkit
