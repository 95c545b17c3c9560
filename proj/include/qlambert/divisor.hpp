// Copyright (c) 2026 qlambert contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

/// \file divisor.hpp
/// Divisor power sums sigma_k(n) = sum_{d|n} d^k, computed two independent
/// ways (per-value trial division, and a sieve over a whole range), plus
/// their generating function laid out on a stride.

#include <cstddef>
#include <string>
#include <vector>

#include "series.hpp"

namespace qlambert {

/// sigma_k values for n = 1..limit. values[n-1] holds sigma_k(n).
struct SigmaTable {
    unsigned k = 1;
    std::size_t limit = 0;
    std::vector<Int> values;

    const Int& at(std::size_t n) const {
        if (n == 0 || n > limit)
            throw domain_error("SigmaTable: n out of range");
        return values[n - 1];
    }
};

inline Int int_pow(Int base, unsigned exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1u)
            r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

/// sigma_k(n) by trial division over d <= sqrt(n). The reference
/// implementation everything else is checked against.
inline Int sigma_naive(unsigned k, std::size_t n) {
    if (n == 0)
        throw domain_error("sigma_naive: n must be positive");
    Int total = 0;
    for (std::size_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        total += int_pow(Int(d), k);
        const std::size_t e = n / d;
        if (e != d)
            total += int_pow(Int(e), k);
    }
    return total;
}

/// sigma_k(n) for all n = 1..limit at once: each divisor d contributes
/// d^k to every multiple of d. O(limit log limit) additions.
inline SigmaTable sigma_sieve(unsigned k, std::size_t limit) {
    if (limit == 0)
        throw domain_error("sigma_sieve: limit must be positive");
    SigmaTable t;
    t.k = k;
    t.limit = limit;
    t.values.assign(limit, Int(0));
    for (std::size_t d = 1; d <= limit; ++d) {
        const Int dk = int_pow(Int(d), k);
        for (std::size_t m = d; m <= limit; m += d)
            t.values[m - 1] += dk;
    }
    return t;
}

/// sum_{n>=1} sigma_k(n) q^{stride*n}, truncated. The coefficient of
/// q^{stride*n} is sigma_k(n); all other coefficients are zero.
inline Series sigma_gf(unsigned k, std::size_t stride, std::size_t order) {
    if (stride == 0)
        throw domain_error("sigma_gf: stride must be positive");
    Series r(order);
    if (order <= stride)
        return r;
    const std::size_t limit = (order - 1) / stride;
    SigmaTable t = sigma_sieve(k, limit);
    for (std::size_t n = 1; n <= limit; ++n)
        r.add_at(stride * n, t.values[n - 1]);
    return r;
}

} // namespace qlambert
