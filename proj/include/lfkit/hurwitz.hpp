#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "lfkit/errors.hpp"
#include "lfkit/eval_result.hpp"
#include "lfkit/numerics.hpp"

namespace lfkit {

namespace detail {

// B_2 .. B_18; the ninth entry only feeds the remainder bound.
inline constexpr double bernoulli2k[9] = {
    1.0 / 6.0,      -1.0 / 30.0,    1.0 / 42.0,  -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0,     -3617.0 / 510.0, 43867.0 / 798.0,
};

struct em_result {
    cplx value;
    cplx deriv;
    double bound;
    long terms;
};

// Euler-Maclaurin for zeta(s, a) with 8 Bernoulli correction terms:
//   sum_{n<N} (n+a)^-s + (N+a)^{1-s}/(s-1) + (N+a)^-s / 2
//     + sum_k B_2k/(2k)! (s)_{2k-1} (N+a)^{-s-2k+1}.
// Remainder after the k = 8 term is bounded by the k = 9 term times
// |s+17|/(sigma+17) (valid for sigma > -17). Also returns d/ds.
inline em_result hurwitz_em(cplx s, double a, long n_cut) {
    constexpr int K = 8;
    em_result r{};
    cplx sum(0.0, 0.0), dsum(0.0, 0.0);
    for (long n = 0; n < n_cut; ++n) {
        const double x = static_cast<double>(n) + a;
        const double lx = std::log(x);
        const cplx term = std::exp(-s * lx);
        sum += term;
        dsum -= lx * term;
    }
    const double x = static_cast<double>(n_cut) + a;
    const double lx = std::log(x);
    const cplx xms = std::exp(-s * lx);         // (N+a)^-s
    const cplx sm1 = s - 1.0;

    sum += xms * x / sm1;
    dsum += xms * x * (-lx / sm1 - 1.0 / (sm1 * sm1));
    sum += 0.5 * xms;
    dsum -= 0.5 * lx * xms;

    cplx rising(1.0, 0.0);      // (s)_{2k-1} built incrementally
    cplx rising_lsum(0.0, 0.0); // sum of 1/(s+j) over the same factors
    cplx pw = xms / x;          // (N+a)^{-s-1}
    double fact = 2.0;          // (2k)!
    int j = 0;                  // next factor index in the rising product
    double tail_mag = 0.0;
    for (int k = 1; k <= K + 1; ++k) {
        while (j < 2 * k - 1) {
            const cplx f = s + static_cast<double>(j);
            rising *= f;
            rising_lsum += 1.0 / f;
            ++j;
        }
        const cplx term = (bernoulli2k[k - 1] / fact) * rising * pw;
        if (k <= K) {
            sum += term;
            dsum += term * (rising_lsum - lx);
        } else {
            tail_mag = std::abs(term) * std::abs(s + 17.0) /
                       std::max(s.real() + 17.0, 1e-3);
        }
        pw /= x * x;
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    r.value = sum;
    r.deriv = dsum;
    r.bound = tail_mag;
    r.terms = n_cut + K;
    return r;
}

inline long hurwitz_start_cutoff(cplx s) {
    return std::max<long>(20, static_cast<long>(std::ceil(std::abs(s.imag()) / 2.0)));
}

}  // namespace detail

/// Hurwitz zeta(s, a) for a in (0,1], s != 1. Cutoff doubles until the
/// Euler-Maclaurin remainder bound meets target_precision.
inline EvalResult hurwitz_zeta(cplx s, double a, double target_precision = 1e-12) {
    if (!(a > 0.0) || a > 1.0) throw std::invalid_argument("hurwitz_zeta: shift a must be in (0,1]");
    if (!(target_precision > 0.0)) throw std::invalid_argument("hurwitz_zeta: precision must be positive");
    if (std::abs(s - cplx(1.0, 0.0)) < 1e-13) throw pole_error("hurwitz_zeta: pole at s = 1");
    if (s.real() < -16.0) throw precision_error("hurwitz_zeta: Re s < -16 outside the Euler-Maclaurin contract");

    long n_cut = detail::hurwitz_start_cutoff(s);
    constexpr long n_cap = 1 << 22;
    for (;;) {
        auto r = detail::hurwitz_em(s, a, n_cut);
        if (r.bound <= target_precision || n_cut >= n_cap) {
            if (r.bound > target_precision)
                throw precision_error("hurwitz_zeta: cannot reach target precision at cutoff cap");
            return {r.value, r.bound, r.terms};
        }
        n_cut *= 2;
    }
}

/// d/ds of hurwitz_zeta, same continuation and cutoff policy. The bound is
/// the value bound scaled by log(N+a), heuristic.
inline EvalResult hurwitz_zeta_deriv(cplx s, double a, double target_precision = 1e-12) {
    if (!(a > 0.0) || a > 1.0) throw std::invalid_argument("hurwitz_zeta_deriv: shift a must be in (0,1]");
    if (std::abs(s - cplx(1.0, 0.0)) < 1e-13) throw pole_error("hurwitz_zeta_deriv: pole at s = 1");
    if (s.real() < -16.0) throw precision_error("hurwitz_zeta_deriv: Re s < -16 outside the Euler-Maclaurin contract");

    long n_cut = detail::hurwitz_start_cutoff(s);
    constexpr long n_cap = 1 << 22;
    for (;;) {
        auto r = detail::hurwitz_em(s, a, n_cut);
        const double dbound = r.bound * (std::log(static_cast<double>(n_cut) + a) + 2.0);
        if (dbound <= target_precision || n_cut >= n_cap) {
            if (dbound > target_precision)
                throw precision_error("hurwitz_zeta_deriv: cannot reach target precision at cutoff cap");
            return {r.deriv, dbound, r.terms};
        }
        n_cut *= 2;
    }
}

/// Riemann zeta by analytic continuation; agrees with hurwitz_zeta(s, 1).
inline EvalResult riemann_zeta(cplx s, double target_precision = 1e-12) {
    if (std::abs(s - cplx(1.0, 0.0)) < 1e-13) throw pole_error("riemann_zeta: pole at s = 1");
    return hurwitz_zeta(s, 1.0, target_precision);
}

inline EvalResult riemann_zeta_deriv(cplx s, double target_precision = 1e-12) {
    if (std::abs(s - cplx(1.0, 0.0)) < 1e-13) throw pole_error("riemann_zeta_deriv: pole at s = 1");
    return hurwitz_zeta_deriv(s, 1.0, target_precision);
}

}  // namespace lfkit
