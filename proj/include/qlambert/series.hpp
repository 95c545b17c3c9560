// Copyright (c) 2026 qlambert contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

/// \file series.hpp
/// Dense truncated formal power series over exact arbitrary-precision
/// integers. A Series of order N stores the coefficients of q^0..q^{N-1};
/// degrees >= N are unknown, never assumed zero. All arithmetic keeps the
/// order fixed: mixing orders is an error, not an implicit re-truncation.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qlambert {

using Int = boost::multiprecision::cpp_int;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an operation would need coefficients beyond the truncation
/// order, or would silently change precision (mixed-order arithmetic).
struct precision_error : error {
    using error::error;
};

/// Raised by invert_unit when the constant term is not +1 or -1.
struct non_unit_error : error {
    using error::error;
};

/// Raised by geom when the requested expansion 1/(1 - s*q^0) diverges.
struct divergence_error : error {
    using error::error;
};

/// Raised on arguments outside a function's mathematical domain.
struct domain_error : error {
    using error::error;
};

/// Raised on invalid verification / CLI configuration.
struct config_error : error {
    using error::error;
};

namespace detail {

// Running count of expansion terms accumulated via Series::add_at.
// Verification snapshots it around a build to report work done.
inline thread_local std::uint64_t term_counter = 0;

} // namespace detail

/// One term c*q^e, the accumulation unit used by the series builders.
struct ExpTerm {
    Int coefficient;
    std::size_t exponent = 0;
};

class Series {
public:
    /// The zero series of the given truncation order (order >= 1).
    explicit Series(std::size_t order) : c_(order) {
        if (order == 0)
            throw precision_error("series order must be at least 1");
    }

    static Series zero(std::size_t order) { return Series(order); }

    /// Multiplicative identity: 1 + 0*q + ...
    static Series one(std::size_t order) { return monomial(1, 0, order); }

    /// c*q^e; a term at or beyond the order is dropped (it is invisible
    /// at this precision), yielding the zero series.
    static Series monomial(Int c, std::size_t e, std::size_t order) {
        Series s(order);
        if (e < order)
            s.c_[e] = std::move(c);
        return s;
    }

    std::size_t order() const noexcept { return c_.size(); }

    /// Coefficient of q^e. Degrees >= order are unknown: asking for one
    /// is a precision error, never a guessed zero.
    const Int& coeff(std::size_t e) const {
        if (e >= c_.size())
            throw precision_error("coefficient of q^" + std::to_string(e) +
                                  " is beyond truncation order " +
                                  std::to_string(c_.size()));
        return c_[e];
    }

    const Int& operator[](std::size_t e) const { return coeff(e); }

    const std::vector<Int>& coeffs() const noexcept { return c_; }

    /// Accumulate v*q^e. The exponent must be within the order; builders
    /// guarantee this through their enumeration bounds.
    void add_at(std::size_t e, const Int& v) {
        if (e >= c_.size())
            throw precision_error("accumulated term q^" + std::to_string(e) +
                                  " exceeds order " + std::to_string(c_.size()));
        c_[e] += v;
        ++detail::term_counter;
    }

    void add_at(std::size_t e, long v) {
        if (e >= c_.size())
            throw precision_error("accumulated term q^" + std::to_string(e) +
                                  " exceeds order " + std::to_string(c_.size()));
        c_[e] += v;
        ++detail::term_counter;
    }

    void accumulate(const ExpTerm& t) { add_at(t.exponent, t.coefficient); }

    bool operator==(const Series&) const = default;

private:
    std::vector<Int> c_;

    friend Series mul(const Series&, const Series&);
    friend Series invert_unit(const Series&);
    friend Series shift(const Series&, std::size_t);
    friend Series geom(int, std::size_t, std::size_t);
    friend Series pochhammer_inf(std::size_t, std::size_t, std::size_t);
    friend Series pochhammer_fin(std::size_t, std::size_t, std::size_t, std::size_t);
    friend Series add(const Series&, const Series&);
    friend Series sub(const Series&, const Series&);
    friend Series neg(const Series&);
    friend Series scale(const Series&, const Int&);
};

namespace detail {

inline void require_same_order(const Series& a, const Series& b) {
    if (a.order() != b.order())
        throw precision_error("mixed-order arithmetic: " +
                              std::to_string(a.order()) + " vs " +
                              std::to_string(b.order()));
}

} // namespace detail

inline Series add(const Series& a, const Series& b) {
    detail::require_same_order(a, b);
    Series r = a;
    for (std::size_t e = 0; e < r.c_.size(); ++e)
        r.c_[e] += b.c_[e];
    return r;
}

inline Series sub(const Series& a, const Series& b) {
    detail::require_same_order(a, b);
    Series r = a;
    for (std::size_t e = 0; e < r.c_.size(); ++e)
        r.c_[e] -= b.c_[e];
    return r;
}

inline Series neg(const Series& a) {
    Series r = a;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

inline Series scale(const Series& a, const Int& c) {
    Series r = a;
    for (auto& x : r.c_)
        x *= c;
    return r;
}

/// Truncated convolution, the reference O(N^2) schoolbook product.
/// result[e] = sum_{i+j=e} a[i]*b[j]; degrees >= order of either operand
/// never contribute because they are not represented.
inline Series mul(const Series& a, const Series& b) {
    detail::require_same_order(a, b);
    const std::size_t n = a.order();
    Series r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j + i < n; ++j) {
            if (b.c_[j] == 0)
                continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

/// Multiplication by q^s: result[e] = a[e-s]; the top s coefficients of a
/// fall off the end.
inline Series shift(const Series& a, std::size_t s) {
    const std::size_t n = a.order();
    Series r(n);
    for (std::size_t e = s; e < n; ++e)
        r.c_[e] = a.c_[e - s];
    return r;
}

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return neg(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator*(const Series& a, const Int& c) { return scale(a, c); }
inline Series operator*(const Int& c, const Series& a) { return scale(a, c); }

/// Geometric expansion 1/(1 - sign*q^period) = sum_t sign^t q^{period*t}.
inline Series geom(int sign, std::size_t period, std::size_t order) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("geom: sign must be +1 or -1");
    if (period == 0)
        throw divergence_error("geom: period 0 does not expand as a power series");
    Series r(order);
    int c = 1;
    for (std::size_t e = 0; e < order; e += period) {
        r.c_[e] = c;
        if (sign < 0)
            c = -c;
    }
    return r;
}

/// Inverse of a unit series (constant term +1 or -1), by the standard
/// recurrence b[0] = 1/a[0], b[e] = -a[0] * sum_{i=1..e} a[i]*b[e-i].
inline Series invert_unit(const Series& a) {
    const std::size_t n = a.order();
    const Int& u = a.coeff(0);
    if (u != 1 && u != -1)
        throw non_unit_error("invert_unit: constant term must be +1 or -1");
    Series b(n);
    b.c_[0] = u;
    for (std::size_t e = 1; e < n; ++e) {
        Int acc = 0;
        for (std::size_t i = 1; i <= e; ++i) {
            if (a.c_[i] == 0)
                continue;
            acc += a.c_[i] * b.c_[e - i];
        }
        b.c_[e] = -u * acc;
    }
    return b;
}

/// (q^c; q^d)_inf = prod_{j>=0} (1 - q^{c+dj}), truncated. Factors whose
/// exponent reaches the order are 1 + O(q^order) and are skipped.
inline Series pochhammer_inf(std::size_t c, std::size_t d, std::size_t order) {
    if (c == 0 || d == 0)
        throw domain_error("pochhammer_inf: c and d must be positive");
    Series r = Series::one(order);
    for (std::size_t p = c; p < order; p += d) {
        // in-place multiply by (1 - q^p), identical to mul(r, 1 - q^p)
        for (std::size_t e = order; e-- > p;)
            r.c_[e] -= r.c_[e - p];
    }
    return r;
}

/// Finite product prod_{j=0..n-1} (1 - q^{c+dj}), truncated.
inline Series pochhammer_fin(std::size_t c, std::size_t d, std::size_t n,
                             std::size_t order) {
    if (c == 0 || d == 0)
        throw domain_error("pochhammer_fin: c and d must be positive");
    Series r = Series::one(order);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t p = c + d * j;
        if (p >= order)
            break; // remaining factors are 1 + O(q^order)
        for (std::size_t e = order; e-- > p;)
            r.c_[e] -= r.c_[e - p];
    }
    return r;
}

} // namespace qlambert
