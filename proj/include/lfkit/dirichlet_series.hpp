#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lfkit/errors.hpp"
#include "lfkit/eval_result.hpp"
#include "lfkit/numerics.hpp"
#include "lfkit/primes.hpp"

namespace lfkit {

/// General Dirichlet series sum a_n e^{-lambda_n s} with totally
/// multiplicative a_n and additive exponents (lambda_1 = 0,
/// lambda_{p^e q^f ...} = e lambda_p + f lambda_q + ...). sigma_c is a
/// declared abscissa of convergence, never inferred.
struct GeneralDirichletSeries {
    std::string name;
    std::function<cplx(std::uint64_t)> coefficient;
    std::function<double(std::uint64_t)> exponent;
    double sigma_c = 1.0;
};

/// a_n = 1, lambda_n = log n: the ordinary zeta series.
inline GeneralDirichletSeries classical_series() {
    return {"classical",
            [](std::uint64_t) { return cplx(1.0, 0.0); },
            [](std::uint64_t n) { return std::log(static_cast<double>(n)); },
            1.0};
}

/// a_n = table[n mod q], lambda_n = log n.
inline GeneralDirichletSeries character_series(std::uint64_t q, std::vector<cplx> table,
                                               double sigma_c) {
    if (table.size() != q) throw std::invalid_argument("character_series: table must have q entries");
    return {"character mod " + std::to_string(q),
            [q, t = std::move(table)](std::uint64_t n) { return t[n % q]; },
            [](std::uint64_t n) { return std::log(static_cast<double>(n)); },
            sigma_c};
}

/// Violations of total multiplicativity a_{mn} = a_m a_n for mn <= n_max
/// (also flags a_1 != 1 as the pair (1,1)).
inline std::vector<std::pair<std::uint64_t, std::uint64_t>>
multiplicativity_violations(const GeneralDirichletSeries& series, std::uint64_t n_max,
                            double tol = 1e-9) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> bad;
    if (std::abs(series.coefficient(1) - cplx(1.0, 0.0)) > tol) bad.emplace_back(1, 1);
    for (std::uint64_t m = 2; m * m <= n_max; ++m) {
        const cplx am = series.coefficient(m);
        for (std::uint64_t n = m; m * n <= n_max; ++n) {
            const cplx lhs = series.coefficient(m * n);
            const cplx rhs = am * series.coefficient(n);
            if (std::abs(lhs - rhs) > tol * (1.0 + std::abs(rhs))) bad.emplace_back(m, n);
        }
    }
    return bad;
}

/// n with |lambda_n - sum alpha_i lambda_{p_i}| above tolerance, n <= n_max.
inline std::vector<std::uint64_t> lambda_additivity_check(const GeneralDirichletSeries& series,
                                                          std::uint64_t n_max, double tol = 1e-9) {
    if (n_max < 2) throw std::invalid_argument("lambda_additivity_check: n_max must be >= 2");
    std::vector<std::uint64_t> bad;
    if (std::abs(series.exponent(1)) > tol) bad.push_back(1);
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        double expected = 0.0;
        for (const auto& [p, e] : factorize(n)) expected += e * series.exponent(p);
        const double got = series.exponent(n);
        if (std::abs(got - expected) > tol * (1.0 + std::abs(got))) bad.push_back(n);
    }
    return bad;
}

/// Truncated sum over n <= cutoff, only valid in the declared half plane of
/// convergence. The error bound is a geometric-tail heuristic read off the
/// trailing terms.
inline EvalResult eval_series(const GeneralDirichletSeries& series, cplx s, long cutoff) {
    if (cutoff < 1) throw std::invalid_argument("eval_series: cutoff must be >= 1");
    if (!(s.real() > series.sigma_c))
        throw outside_convergence_error("eval_series: Re s <= sigma_c, refusing to extrapolate");
    cplx sum(0.0, 0.0);
    double last_mag = 0.0, mid_mag = 0.0;
    const long mid = cutoff / 2;
    for (long n = 1; n <= cutoff; ++n) {
        const cplx term = series.coefficient(n) * std::exp(-series.exponent(n) * s);
        sum += term;
        const double m = std::abs(term);
        if (m > 0.0) last_mag = m;
        if (n == mid && m > 0.0) mid_mag = m;
    }
    double bound = last_mag;
    if (mid_mag > 0.0 && last_mag > 0.0 && cutoff > mid + 1) {
        const double ratio = std::pow(last_mag / mid_mag, 1.0 / static_cast<double>(cutoff - mid));
        if (ratio < 1.0) bound = last_mag * ratio / (1.0 - ratio);
        else bound = last_mag * static_cast<double>(cutoff);
    }
    return {sum, bound, cutoff};
}

/// Partial product prod_{p <= n} (1 - a_p e^{-lambda_p s}); empty product
/// is 1. The reciprocal approximates the series for Re s > max(sigma_c, 1).
inline cplx euler_partial_product(const GeneralDirichletSeries& series, cplx s, std::uint64_t n) {
    cplx prod(1.0, 0.0);
    for (std::uint64_t p : primes_up_to(n))
        prod *= 1.0 - series.coefficient(p) * std::exp(-series.exponent(p) * s);
    return prod;
}

}  // namespace lfkit
