#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace lfkit {

/// Primes p <= n by sieve of Eratosthenes.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (std::uint64_t q = p * p; q <= n; q += p) composite[q] = true;
    }
    return out;
}

/// Prime factorization of n as (p, exponent) pairs, ascending p.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1u);
    return f;
}

}  // namespace lfkit
