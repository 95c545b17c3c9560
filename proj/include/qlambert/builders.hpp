// Copyright (c) 2026 qlambert contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

/// \file builders.hpp
/// One constructor per series under study, each expanded directly from its
/// defining sum or product, never via an identity that the verification
/// layer is supposed to check.
///
/// Enumeration bound rule, applied uniformly: a term family c*q^{e0} times
/// geometric factors is enumerated iff its minimal exponent e0 is below the
/// truncation order. Every loop bound below is an instance of that rule;
/// each builder states its bound where it is not obvious.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "divisor.hpp"
#include "series.hpp"

namespace qlambert {

namespace detail {

/// acc += c * q^e0 / (1 - s1*q^j1), expanded term by term.
inline void accum_rat1(Series& acc, Int c, std::size_t e0, int s1,
                       std::size_t j1) {
    const std::size_t n = acc.order();
    for (std::size_t e = e0; e < n; e += j1) {
        acc.add_at(e, c);
        if (s1 < 0)
            c = -c;
    }
}

/// acc += c * q^e0 / ((1 - s1*q^j1)(1 - s2*q^j2)), expanded term by term.
/// Signs alternate with each geometric step when the factor is (1 + q^j).
inline void accum_rat2(Series& acc, Int c, std::size_t e0, int s1,
                       std::size_t j1, int s2, std::size_t j2) {
    const std::size_t n = acc.order();
    for (std::size_t e1 = e0; e1 < n; e1 += j1) {
        Int c2 = c;
        for (std::size_t e = e1; e < n; e += j2) {
            acc.add_at(e, c2);
            if (s2 < 0)
                c2 = -c2;
        }
        if (s1 < 0)
            c = -c;
    }
}

} // namespace detail

/// Parameters consumed by the parametric builders. Unused fields are
/// ignored by builders that do not take them.
struct BuilderParams {
    std::size_t a = 1; // dyadic exponent: strides 2^a and 2^{a-1}
    std::size_t r = 1;
    std::size_t s = 1;
    std::size_t j = 1; // block index for D_j / E_j
    unsigned k = 1;    // sigma power (scanner, sigma_gf)

    void validate() const {
        if (a < 1 || r < 1 || s < 1 || j < 1)
            throw domain_error("builder parameters a, r, s, j must be >= 1");
    }
};

inline std::size_t pow2(std::size_t a) { return std::size_t{1} << a; }

/// Sum_{n>=1} weight(n) q^n/(1-q^n): each weight(n) lands on every
/// multiple of n below the order.
template <typename Weight>
Series lambert_generic(Weight&& weight, std::size_t order) {
    Series acc(order);
    for (std::size_t n = 1; n < order; ++n) {
        const Int w = weight(n);
        if (w == 0)
            continue;
        for (std::size_t e = n; e < order; e += n)
            acc.add_at(e, w);
    }
    return acc;
}

/// Sum_{m,k>=1} q^{2mk}/((1+q^k)(1-q^{2m-1})). Minimal exponent of the
/// (m,k) term is 2mk, so the index set is {(m,k) : 2mk < order}.
inline Series base_double(std::size_t order) {
    Series acc(order);
    for (std::size_t m = 1; 2 * m < order; ++m)
        for (std::size_t k = 1; 2 * m * k < order; ++k)
            detail::accum_rat2(acc, 1, 2 * m * k, -1, k, +1, 2 * m - 1);
    return acc;
}

/// base_double under the substitution q -> q^delta with delta = 2^{a-1}:
/// Sum_{m,k} q^{2mk*delta}/((1+q^{k*delta})(1-q^{(2m-1)*delta})). For a=1
/// this is base_double itself. It is the series the dyadic double sum
/// collapses to on exponents divisible by 2^a.
inline Series base_double_scaled(std::size_t a, std::size_t order) {
    if (a < 1)
        throw domain_error("base_double_scaled: a must be >= 1");
    const std::size_t d = pow2(a - 1);
    Series acc(order);
    for (std::size_t m = 1; 2 * m * d < order; ++m)
        for (std::size_t k = 1; 2 * m * k * d < order; ++k)
            detail::accum_rat2(acc, 1, 2 * m * k * d, -1, k * d, +1,
                               (2 * m - 1) * d);
    return acc;
}

/// Sum_{n>=1} q^{2n}/(1-q^{2n})^2 = Sum_{n,t>=1} t q^{2nt}.
inline Series single_rhs(std::size_t order) {
    Series acc(order);
    for (std::size_t n = 1; 2 * n < order; ++n)
        detail::accum_rat2(acc, 1, 2 * n, +1, 2 * n, +1, 2 * n);
    return acc;
}

/// Sum_{m,k>=1} q^{mk*2^a}/((1+q^{k*2^{a-1}})(1-q^{2m-1})).
inline Series dyadic_double(std::size_t a, std::size_t order) {
    if (a < 1)
        throw domain_error("dyadic_double: a must be >= 1");
    const std::size_t p = pow2(a);
    const std::size_t h = pow2(a - 1);
    Series acc(order);
    for (std::size_t m = 1; m * p < order; ++m)
        for (std::size_t k = 1; m * k * p < order; ++k)
            detail::accum_rat2(acc, 1, m * k * p, -1, k * h, +1, 2 * m - 1);
    return acc;
}

/// Sum_{m,n>=1} q^{2mn}/((1+q^{2n-1})(1-q^{2m-1})).
inline Series conj2_lhs(std::size_t order) {
    Series acc(order);
    for (std::size_t m = 1; 2 * m < order; ++m)
        for (std::size_t n = 1; 2 * m * n < order; ++n)
            detail::accum_rat2(acc, 1, 2 * m * n, -1, 2 * n - 1, +1, 2 * m - 1);
    return acc;
}

/// Sum_{n>=1} (n-1) q^n/(1+q^{2n-1}), i.e. (n-1)(-1)^t at q^{n+(2n-1)t}.
inline Series conj2_rhs(std::size_t order) {
    Series acc(order);
    for (std::size_t n = 1; n < order; ++n) {
        if (n == 1)
            continue; // factor (n-1) kills the first row
        detail::accum_rat1(acc, Int(n) - 1, n, -1, 2 * n - 1);
    }
    return acc;
}

/// Y(q) = Sum_{m,n>=1} (-q)^{2mn+m}/((1+q^n)(1-q^{2m-1})); the numerator
/// sign is (-1)^m since 2mn+m has the parity of m. Minimal exponent for a
/// given m is 2m+m = 3m.
inline Series y_series(std::size_t order) {
    Series acc(order);
    for (std::size_t m = 1; 3 * m < order; ++m) {
        const Int sgn = (m % 2 == 0) ? 1 : -1;
        for (std::size_t n = 1; 2 * m * n + m < order; ++n)
            detail::accum_rat2(acc, sgn, 2 * m * n + m, -1, n, +1, 2 * m - 1);
    }
    return acc;
}

/// -q * (q^4;q^4)^4 / (q^2;q^2)^2 * Sum_{k>=1} q^{2k}/(1+q^{2k}), the
/// closed form claimed for Y(q). Built from its own pieces: Pochhammer
/// products, unit inversion, one alternating Lambert-type sum.
inline Series ct_rhs(std::size_t order) {
    const Series p4 = pochhammer_inf(4, 4, order);
    const Series p2 = pochhammer_inf(2, 2, order);
    const Series num = mul(mul(p4, p4), mul(p4, p4));
    const Series den_inv = invert_unit(mul(p2, p2));

    // q^{2k}/(1+q^{2k}) = sum_{t>=1} (-1)^{t-1} q^{2kt}
    Series tail(order);
    for (std::size_t k = 1; 2 * k < order; ++k)
        detail::accum_rat1(tail, 1, 2 * k, -1, 2 * k);

    return neg(shift(mul(mul(num, den_inv), tail), 1));
}

/// E2(q) = 1 - 24 Sum_{n>=1} sigma_1(n) q^{2n}, from the sieve.
inline Series e2(std::size_t order) {
    return Series::one(order) - scale(sigma_gf(1, 2, order), 24);
}

/// E2 via the double Lambert sum: 1 - 24 * base_double. Deliberately NOT
/// built from sigma_gf; its agreement with e2 is one of the checked
/// identities.
inline Series e2_double(std::size_t order) {
    return Series::one(order) - scale(base_double(order), 24);
}

/// Sum_{m>=1} q^{2m-1}/(1-q^{2m-1}) * Sum_{n>=m} q^{2n}/(1-q^{2n}).
/// Minimal exponent for a given m is (2m-1)+2m = 4m-1; the inner tail sum
/// is enumerated directly from n = m.
inline Series lemma21_lhs(std::size_t order) {
    Series acc(order);
    for (std::size_t m = 1; 4 * m - 1 < order; ++m)
        for (std::size_t n = m; (2 * m - 1) + 2 * n < order; ++n)
            detail::accum_rat2(acc, 1, (2 * m - 1) + 2 * n, +1, 2 * m - 1, +1,
                               2 * n);
    return acc;
}

/// Sum_{m>=1} 1/(1-q^{2m-1}) * Sum_{n>=m+1} q^{2n-1}/(1-q^{2n-1}).
/// Minimal exponent for a given m is 2(m+1)-1 = 2m+1.
inline Series lemma21_rhs(std::size_t order) {
    Series acc(order);
    for (std::size_t m = 1; 2 * m + 1 < order; ++m)
        for (std::size_t n = m + 1; 2 * n - 1 < order; ++n)
            detail::accum_rat2(acc, 1, 2 * n - 1, +1, 2 * m - 1, +1, 2 * n - 1);
    return acc;
}

/// Sum_{n>=1} q^{(2n-1)s}/(1-q^{(2n-1)r}) * Sum_{m>=n+1}
/// q^{(2m-1)r}/(1-q^{(2m-1)r}). Minimal exponent for a given n sits at
/// m = n+1: (2n-1)s + (2n+1)r.
inline Series lemma22_lhs(std::size_t r, std::size_t s, std::size_t order) {
    if (r < 1 || s < 1)
        throw domain_error("lemma22_lhs: r and s must be >= 1");
    Series acc(order);
    for (std::size_t n = 1; (2 * n - 1) * s + (2 * n + 1) * r < order; ++n)
        for (std::size_t m = n + 1; (2 * n - 1) * s + (2 * m - 1) * r < order;
             ++m)
            detail::accum_rat2(acc, 1, (2 * n - 1) * s + (2 * m - 1) * r, +1,
                               (2 * n - 1) * r, +1, (2 * m - 1) * r);
    return acc;
}

/// Sum_{m>=1} q^{2rm}/(1-q^{2rm}) * Sum_{n>=m} q^{rn+s}/(1-q^{2rn+2s}).
/// Minimal exponent for a given m sits at n = m: 3rm + s.
inline Series lemma22_rhs(std::size_t r, std::size_t s, std::size_t order) {
    if (r < 1 || s < 1)
        throw domain_error("lemma22_rhs: r and s must be >= 1");
    Series acc(order);
    for (std::size_t m = 1; 3 * r * m + s < order; ++m)
        for (std::size_t n = m; 2 * r * m + r * n + s < order; ++n)
            detail::accum_rat2(acc, 1, 2 * r * m + r * n + s, +1, 2 * r * m,
                               +1, 2 * r * n + 2 * s);
    return acc;
}

/// F(a) = Sum_{m,n>=1} (q^{mn*2^a+2m-1} - q^{mn*2^a+n*2^{a-1}})
///        / ((1-q^{n*2^a})(1-q^{2m-1})).
/// The two numerator terms are enumerated independently, each iff its own
/// minimal exponent is below the order; the loop bounds cover the union
/// via the smaller of the two.
inline Series f_series(std::size_t a, std::size_t order) {
    if (a < 1)
        throw domain_error("f_series: a must be >= 1");
    const std::size_t p = pow2(a);
    const std::size_t h = pow2(a - 1);
    Series acc(order);
    for (std::size_t m = 1;
         m * p + std::min(2 * m - 1, h) < order; ++m) {
        for (std::size_t n = 1;
             m * n * p + std::min(2 * m - 1, n * h) < order; ++n) {
            const std::size_t e1 = m * n * p + 2 * m - 1;
            const std::size_t e2 = m * n * p + n * h;
            if (e1 < order)
                detail::accum_rat2(acc, 1, e1, +1, n * p, +1, 2 * m - 1);
            if (e2 < order)
                detail::accum_rat2(acc, -1, e2, +1, n * p, +1, 2 * m - 1);
        }
    }
    return acc;
}

/// D_j = q^j/(1-q^{2j}).
inline Series block_d(std::size_t j, std::size_t order) {
    if (j < 1)
        throw domain_error("block_d: j must be >= 1");
    return shift(geom(+1, 2 * j, order), j);
}

/// E_j = q^{2j}/(1-q^{2j}).
inline Series block_e(std::size_t j, std::size_t order) {
    if (j < 1)
        throw domain_error("block_e: j must be >= 1");
    return shift(geom(+1, 2 * j, order), 2 * j);
}

/// D_r * D_{r+s}, the left side of the telescoping block identity.
inline Series telescope_lhs(std::size_t r, std::size_t s, std::size_t order) {
    return mul(block_d(r, order), block_d(r + s, order));
}

/// E_r * D_s - D_s * E_{r+s}, the right side of the telescoping block
/// identity.
inline Series telescope_rhs(std::size_t r, std::size_t s, std::size_t order) {
    const Series ds = block_d(s, order);
    return sub(mul(block_e(r, order), ds), mul(ds, block_e(r + s, order)));
}

/// Sum_{m>=1} q^{2m-1}/(1-q^{2m-1}).
inline Series odd_swap_lhs(std::size_t order) {
    Series acc(order);
    for (std::size_t m = 1; 2 * m - 1 < order; ++m)
        detail::accum_rat1(acc, 1, 2 * m - 1, +1, 2 * m - 1);
    return acc;
}

/// Sum_{m>=1} q^m/(1-q^{2m}).
inline Series odd_swap_rhs(std::size_t order) {
    Series acc(order);
    for (std::size_t m = 1; m < order; ++m)
        detail::accum_rat1(acc, 1, m, +1, 2 * m);
    return acc;
}

/// base_double with each m-row weighted by w(m):
/// Sum_{m,k>=1} w(m) q^{2mk}/((1+q^k)(1-q^{2m-1})). w == 1 recovers
/// base_double exactly.
template <typename Weight>
Series weighted_double(Weight&& w, std::size_t order) {
    Series acc(order);
    for (std::size_t m = 1; 2 * m < order; ++m) {
        const Int wm = w(m);
        if (wm == 0)
            continue;
        for (std::size_t k = 1; 2 * m * k < order; ++k)
            detail::accum_rat2(acc, wm, 2 * m * k, -1, k, +1, 2 * m - 1);
    }
    return acc;
}

/// Exploratory candidate for a sigma_k analogue of the double-sum
/// transformation: the weighted double sum with w(m) = m^{k-1}. For k=1
/// this is base_double, whose stride-2 coefficients are sigma_1. For
/// k >= 2 nothing is asserted; the scan command tabulates it against
/// sigma_gf(k, 2, order) for inspection.
inline Series scanner_candidate(unsigned k, std::size_t order) {
    if (k < 1)
        throw domain_error("scanner_candidate: k must be >= 1");
    return weighted_double(
        [k](std::size_t m) { return int_pow(Int(m), k - 1); }, order);
}

/// Catalog of builders addressable by a stable string id, for the
/// verification registry and the CLI. Parametric builders read their
/// parameters from BuilderParams.
using BuilderFn = std::function<Series(const BuilderParams&, std::size_t)>;

inline const std::map<std::string, BuilderFn>& builder_catalog() {
    static const std::map<std::string, BuilderFn> catalog = {
        {"zero", [](const BuilderParams&, std::size_t n) { return Series::zero(n); }},
        {"lambert-count",
         [](const BuilderParams&, std::size_t n) {
             return lambert_generic([](std::size_t) { return Int(1); }, n);
         }},
        {"lambert-linear",
         [](const BuilderParams&, std::size_t n) {
             return lambert_generic([](std::size_t m) { return Int(m); }, n);
         }},
        {"base-double",
         [](const BuilderParams&, std::size_t n) { return base_double(n); }},
        {"base-double-scaled",
         [](const BuilderParams& p, std::size_t n) {
             return base_double_scaled(p.a, n);
         }},
        {"single-rhs",
         [](const BuilderParams&, std::size_t n) { return single_rhs(n); }},
        {"sigma-gf",
         [](const BuilderParams& p, std::size_t n) {
             return sigma_gf(p.k, 2, n);
         }},
        {"dyadic-double",
         [](const BuilderParams& p, std::size_t n) {
             return dyadic_double(p.a, n);
         }},
        {"conj2-lhs",
         [](const BuilderParams&, std::size_t n) { return conj2_lhs(n); }},
        {"conj2-rhs",
         [](const BuilderParams&, std::size_t n) { return conj2_rhs(n); }},
        {"y-series",
         [](const BuilderParams&, std::size_t n) { return y_series(n); }},
        {"ct-rhs",
         [](const BuilderParams&, std::size_t n) { return ct_rhs(n); }},
        {"e2", [](const BuilderParams&, std::size_t n) { return e2(n); }},
        {"e2-double",
         [](const BuilderParams&, std::size_t n) { return e2_double(n); }},
        {"lem21-lhs",
         [](const BuilderParams&, std::size_t n) { return lemma21_lhs(n); }},
        {"lem21-rhs",
         [](const BuilderParams&, std::size_t n) { return lemma21_rhs(n); }},
        {"lem22-lhs",
         [](const BuilderParams& p, std::size_t n) {
             return lemma22_lhs(p.r, p.s, n);
         }},
        {"lem22-rhs",
         [](const BuilderParams& p, std::size_t n) {
             return lemma22_rhs(p.r, p.s, n);
         }},
        {"f-series",
         [](const BuilderParams& p, std::size_t n) { return f_series(p.a, n); }},
        {"block-d",
         [](const BuilderParams& p, std::size_t n) { return block_d(p.j, n); }},
        {"block-e",
         [](const BuilderParams& p, std::size_t n) { return block_e(p.j, n); }},
        {"telescope-lhs",
         [](const BuilderParams& p, std::size_t n) {
             return telescope_lhs(p.r, p.s, n);
         }},
        {"telescope-rhs",
         [](const BuilderParams& p, std::size_t n) {
             return telescope_rhs(p.r, p.s, n);
         }},
        {"odd-swap-lhs",
         [](const BuilderParams&, std::size_t n) { return odd_swap_lhs(n); }},
        {"odd-swap-rhs",
         [](const BuilderParams&, std::size_t n) { return odd_swap_rhs(n); }},
        {"scanner-candidate",
         [](const BuilderParams& p, std::size_t n) {
             return scanner_candidate(p.k, n);
         }},
    };
    return catalog;
}

/// True when the dyadic-family builder named by id sees no complete
/// exponent block below the order (order <= 2^a). Callers surface this as
/// a warning, not an error.
inline bool order_below_dyadic_range(const std::string& id,
                                     const BuilderParams& p,
                                     std::size_t order) {
    if (id != "dyadic-double" && id != "f-series" && id != "base-double-scaled")
        return false;
    return order <= pow2(p.a);
}

} // namespace qlambert
