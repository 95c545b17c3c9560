// Copyright (c) 2026 qlambert contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

/// \file verify.hpp
/// The identity registry and verification engine. Each registered case
/// names two sides (builders from the catalog, or a sigma table) and a
/// comparison mode; verification builds both sides at a requested order
/// and reports the smallest mismatching exponent, if any.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "builders.hpp"
#include "divisor.hpp"
#include "series.hpp"

namespace qlambert {

/// How the two sides of a case are compared.
///  - full_equality: coefficients agree at every exponent < order.
///  - stride_equality: agree at every exponent divisible by stride.
///  - zero_stride: lhs vanishes at every exponent divisible by stride
///    (exponent >= stride); rhs unused.
///  - even_zero / odd_zero: lhs vanishes at every even / odd exponent;
///    rhs unused.
///  - stride_vs_table: lhs coefficient at n*stride equals sigma_k(n) from
///    a sieve table built for the run (limit*stride < order by
///    construction).
struct CompareMode {
    enum class Kind {
        full_equality,
        stride_equality,
        zero_stride,
        even_zero,
        odd_zero,
        stride_vs_table,
    };

    Kind kind = Kind::full_equality;
    std::size_t stride = 1;
    unsigned table_k = 1;

    static CompareMode full() { return {Kind::full_equality, 1, 1}; }
    static CompareMode stride_eq(std::size_t st) {
        return {Kind::stride_equality, st, 1};
    }
    static CompareMode zero_at_stride(std::size_t st) {
        return {Kind::zero_stride, st, 1};
    }
    static CompareMode even_zero() { return {Kind::even_zero, 1, 1}; }
    static CompareMode odd_zero() { return {Kind::odd_zero, 1, 1}; }
    static CompareMode vs_sigma(unsigned k, std::size_t st) {
        return {Kind::stride_vs_table, st, k};
    }

    bool uses_rhs_series() const {
        return kind == Kind::full_equality || kind == Kind::stride_equality;
    }

    std::string describe() const {
        switch (kind) {
        case Kind::full_equality:
            return "full-equality";
        case Kind::stride_equality:
            return "stride-equality(" + std::to_string(stride) + ")";
        case Kind::zero_stride:
            return "zero-at-stride(" + std::to_string(stride) + ")";
        case Kind::even_zero:
            return "even-zero";
        case Kind::odd_zero:
            return "odd-zero";
        case Kind::stride_vs_table:
            return "vs-sigma" + std::to_string(table_k) + "-table(stride " +
                   std::to_string(stride) + ")";
        }
        return "?";
    }
};

struct Mismatch {
    std::size_t exponent = 0;
    Int lhs;
    Int rhs;

    bool operator==(const Mismatch&) const = default;
};

struct IdentityCase {
    std::string id;
    std::string description;
    BuilderParams params;
    std::string lhs; // builder id from the catalog
    std::string rhs; // builder id, or "sigma1" for table comparison
    CompareMode mode;
    std::string statement; // the claimed identity, spelled out
};

struct VerifyReport {
    std::string id;
    std::size_t order = 0;
    bool pass = false;
    std::optional<Mismatch> first_mismatch;
    std::uint64_t terms_enumerated = 0;
    double elapsed_ms = 0.0;
    std::string error; // non-empty when the case could not run
};

/// Every exponent the mode inspects at the given order, ascending.
inline std::vector<std::size_t> checked_exponents(const CompareMode& m,
                                                  std::size_t order) {
    std::vector<std::size_t> es;
    switch (m.kind) {
    case CompareMode::Kind::full_equality:
        for (std::size_t e = 0; e < order; ++e)
            es.push_back(e);
        break;
    case CompareMode::Kind::stride_equality:
        for (std::size_t e = 0; e < order; e += m.stride)
            es.push_back(e);
        break;
    case CompareMode::Kind::zero_stride:
        for (std::size_t e = m.stride; e < order; e += m.stride)
            es.push_back(e);
        break;
    case CompareMode::Kind::even_zero:
        for (std::size_t e = 0; e < order; e += 2)
            es.push_back(e);
        break;
    case CompareMode::Kind::odd_zero:
        for (std::size_t e = 1; e < order; e += 2)
            es.push_back(e);
        break;
    case CompareMode::Kind::stride_vs_table:
        for (std::size_t e = m.stride; e < order; e += m.stride)
            es.push_back(e);
        break;
    }
    return es;
}

/// Compare prebuilt sides under the mode; smallest failing exponent or
/// nothing. rhs is read only by the equality modes; zero modes test lhs
/// against literal zero, the table mode against a fresh sieve table.
inline std::optional<Mismatch> compare_sides(const Series& lhs,
                                             const Series& rhs,
                                             const CompareMode& m) {
    const std::size_t order = lhs.order();
    switch (m.kind) {
    case CompareMode::Kind::full_equality:
    case CompareMode::Kind::stride_equality: {
        detail::require_same_order(lhs, rhs);
        const std::size_t step =
            (m.kind == CompareMode::Kind::full_equality) ? 1 : m.stride;
        for (std::size_t e = 0; e < order; e += step)
            if (lhs.coeff(e) != rhs.coeff(e))
                return Mismatch{e, lhs.coeff(e), rhs.coeff(e)};
        return std::nullopt;
    }
    case CompareMode::Kind::zero_stride:
        for (std::size_t e = m.stride; e < order; e += m.stride)
            if (lhs.coeff(e) != 0)
                return Mismatch{e, lhs.coeff(e), Int(0)};
        return std::nullopt;
    case CompareMode::Kind::even_zero:
        for (std::size_t e = 0; e < order; e += 2)
            if (lhs.coeff(e) != 0)
                return Mismatch{e, lhs.coeff(e), Int(0)};
        return std::nullopt;
    case CompareMode::Kind::odd_zero:
        for (std::size_t e = 1; e < order; e += 2)
            if (lhs.coeff(e) != 0)
                return Mismatch{e, lhs.coeff(e), Int(0)};
        return std::nullopt;
    case CompareMode::Kind::stride_vs_table: {
        if (order <= m.stride)
            return std::nullopt; // no tabulated exponent in range
        const std::size_t limit = (order - 1) / m.stride;
        const SigmaTable t = sigma_sieve(m.table_k, limit);
        for (std::size_t n = 1; n <= limit; ++n)
            if (lhs.coeff(n * m.stride) != t.values[n - 1])
                return Mismatch{n * m.stride, lhs.coeff(n * m.stride),
                                t.values[n - 1]};
        return std::nullopt;
    }
    }
    return std::nullopt;
}

/// All exponents where the two series differ, ascending.
inline std::vector<Mismatch> diff(const Series& lhs, const Series& rhs) {
    detail::require_same_order(lhs, rhs);
    std::vector<Mismatch> out;
    for (std::size_t e = 0; e < lhs.order(); ++e)
        if (lhs.coeff(e) != rhs.coeff(e))
            out.push_back({e, lhs.coeff(e), rhs.coeff(e)});
    return out;
}

/// Build the series a case side refers to. Table references ("sigma1")
/// are not series and are rejected here; the compare step handles them.
inline Series build_side(const std::string& ref, const BuilderParams& p,
                         std::size_t order) {
    p.validate();
    const auto& catalog = builder_catalog();
    const auto it = catalog.find(ref);
    if (it == catalog.end())
        throw config_error("unknown series id: " + ref);
    return it->second(p, order);
}

inline const std::vector<IdentityCase>& registry() {
    static const std::vector<IdentityCase> cases = [] {
        std::vector<IdentityCase> v;
        BuilderParams p;

        v.push_back({"thm-base",
                     "double alternating Lambert sum equals the weighted "
                     "single Lambert sum",
                     p, "base-double", "single-rhs", CompareMode::full(),
                     "sum_{m,k>=1} q^(2mk)/((1+q^k)(1-q^(2m-1))) = "
                     "sum_{n>=1} q^(2n)/(1-q^(2n))^2"});
        v.push_back({"thm-base-sigma",
                     "weighted single Lambert sum equals the sigma_1 "
                     "generating function on stride 2",
                     p, "single-rhs", "sigma-gf", CompareMode::full(),
                     "sum_{n>=1} q^(2n)/(1-q^(2n))^2 = "
                     "sum_{N>=1} sigma_1(N) q^(2N)"});

        for (std::size_t a = 1; a <= 5; ++a) {
            BuilderParams pa;
            pa.a = a;
            v.push_back(
                {"thm-main-a" + std::to_string(a),
                 "dyadic double sum hits sigma_1 on exponents divisible by "
                 "2^" + std::to_string(a),
                 pa, "dyadic-double", "sigma1",
                 CompareMode::vs_sigma(1, pow2(a)),
                 "[q^(N*2^a)] sum_{m,k>=1} q^(mk*2^a)/"
                 "((1+q^(k*2^(a-1)))(1-q^(2m-1))) = sigma_1(N), a=" +
                     std::to_string(a)});
        }

        v.push_back({"conj2",
                     "two-index alternating double sum matches the weighted "
                     "single sum at even exponents",
                     p, "conj2-lhs", "conj2-rhs", CompareMode::stride_eq(2),
                     "[q^(2N)] sum_{m,n>=1} q^(2mn)/((1+q^(2n-1))(1-q^(2m-1)))"
                     " = [q^(2N)] sum_{n>=1} (n-1) q^n/(1+q^(2n-1))"});

        v.push_back({"y-odd", "Y(q) is an odd series", p, "y-series", "zero",
                     CompareMode::even_zero(),
                     "sum_{m,n>=1} (-q)^(2mn+m)/((1+q^n)(1-q^(2m-1))) has "
                     "zero coefficient at every even exponent"});

        v.push_back({"ct-identity",
                     "Y(q) equals its product closed form", p, "y-series",
                     "ct-rhs", CompareMode::full(),
                     "sum_{m,n>=1} (-q)^(2mn+m)/((1+q^n)(1-q^(2m-1))) = "
                     "-q (q^4;q^4)_inf^4/(q^2;q^2)_inf^2 "
                     "sum_{k>=1} q^(2k)/(1+q^(2k))"});

        v.push_back({"cor-e2",
                     "quasimodular E2 equals its double Lambert form", p,
                     "e2", "e2-double", CompareMode::full(),
                     "1 - 24 sum_{n>=1} sigma_1(n) q^(2n) = "
                     "1 - 24 sum_{m,k>=1} q^(2mk)/((1+q^k)(1-q^(2m-1)))"});

        v.push_back({"lem21",
                     "odd-times-even tail product sum equals the odd-odd "
                     "tail product sum",
                     p, "lem21-lhs", "lem21-rhs", CompareMode::full(),
                     "sum_{m>=1} q^(2m-1)/(1-q^(2m-1)) sum_{n>=m} "
                     "q^(2n)/(1-q^(2n)) = sum_{m>=1} 1/(1-q^(2m-1)) "
                     "sum_{n>=m+1} q^(2n-1)/(1-q^(2n-1))"});

        for (std::size_t r = 1; r <= 6; ++r)
            for (std::size_t s = 1; s <= 6; ++s) {
                BuilderParams prs;
                prs.r = r;
                prs.s = s;
                v.push_back(
                    {"lem22-r" + std::to_string(r) + "s" + std::to_string(s),
                     "two-parameter tail rearrangement",
                     prs, "lem22-lhs", "lem22-rhs", CompareMode::full(),
                     "sum_{n>=1} q^((2n-1)s)/(1-q^((2n-1)r)) sum_{m>=n+1} "
                     "q^((2m-1)r)/(1-q^((2m-1)r)) = sum_{m>=1} "
                     "q^(2rm)/(1-q^(2rm)) sum_{n>=m} q^(rn+s)/(1-q^(2rn+2s)),"
                     " r=" + std::to_string(r) + " s=" + std::to_string(s)});
            }

        {
            BuilderParams pa;
            pa.a = 1;
            v.push_back({"f-zero-a1", "F(1) vanishes identically", pa,
                         "f-series", "zero", CompareMode::full(),
                         "sum_{m,n>=1} (q^(2mn+2m-1) - q^(2mn+n))/"
                         "((1-q^(2n))(1-q^(2m-1))) = 0"});
        }
        for (std::size_t a = 2; a <= 4; ++a) {
            BuilderParams pa;
            pa.a = a;
            v.push_back(
                {"f-stride-a" + std::to_string(a),
                 "F(" + std::to_string(a) + ") vanishes on exponents "
                 "divisible by 2^" + std::to_string(a),
                 pa, "f-series", "zero", CompareMode::zero_at_stride(pow2(a)),
                 "[q^(t*2^a)] sum_{m,n>=1} (q^(mn*2^a+2m-1) - "
                 "q^(mn*2^a+n*2^(a-1)))/((1-q^(n*2^a))(1-q^(2m-1))) = 0, "
                 "a=" + std::to_string(a)});
        }

        for (std::size_t r = 1; r <= 12; ++r)
            for (std::size_t s = 1; s <= 12; ++s) {
                BuilderParams prs;
                prs.r = r;
                prs.s = s;
                v.push_back(
                    {"telescope-r" + std::to_string(r) + "s" +
                         std::to_string(s),
                     "telescoping block product identity", prs,
                     "telescope-lhs", "telescope-rhs", CompareMode::full(),
                     "D_r D_(r+s) = E_r D_s - D_s E_(r+s), where "
                     "D_j = q^j/(1-q^(2j)), E_j = q^(2j)/(1-q^(2j)), r=" +
                         std::to_string(r) + " s=" + std::to_string(s)});
            }

        v.push_back({"odd-swap",
                     "odd-denominator Lambert sum rewritten over all parts",
                     p, "odd-swap-lhs", "odd-swap-rhs", CompareMode::full(),
                     "sum_{m>=1} q^(2m-1)/(1-q^(2m-1)) = "
                     "sum_{m>=1} q^m/(1-q^(2m))"});

        for (std::size_t a = 2; a <= 3; ++a) {
            BuilderParams pa;
            pa.a = a;
            v.push_back(
                {"dyadic-reduction-a" + std::to_string(a),
                 "dyadic double sum collapses to the rescaled base double "
                 "sum on exponents divisible by 2^" + std::to_string(a),
                 pa, "dyadic-double", "base-double-scaled",
                 CompareMode::stride_eq(pow2(a)),
                 "[q^(t*2^a)] sum_{m,k>=1} q^(mk*2^a)/"
                 "((1+q^(k*2^(a-1)))(1-q^(2m-1))) = [q^(t*2^a)] "
                 "sum_{m,k>=1} x^(2mk)/((1+x^k)(1-x^(2m-1))), "
                 "x = q^(2^(a-1)), a=" + std::to_string(a)});
        }

        v.push_back({"base-parity",
                     "base double sum is supported on even exponents", p,
                     "base-double", "zero", CompareMode::odd_zero(),
                     "sum_{m,k>=1} q^(2mk)/((1+q^k)(1-q^(2m-1))) has zero "
                     "coefficient at every odd exponent"});

        return v;
    }();
    return cases;
}

inline const IdentityCase* find_case(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id)
            return &c;
    return nullptr;
}

/// Compare prebuilt sides on behalf of a case, filling in the report
/// metadata. Used by verify and by fault-injection tests that perturb a
/// side before comparing.
inline VerifyReport verify_prebuilt(const IdentityCase& c, const Series& lhs,
                                    const Series& rhs, std::size_t order,
                                    std::uint64_t terms, double elapsed_ms) {
    VerifyReport rep;
    rep.id = c.id;
    rep.order = order;
    rep.first_mismatch = compare_sides(lhs, rhs, c.mode);
    rep.pass = !rep.first_mismatch.has_value();
    rep.terms_enumerated = terms;
    rep.elapsed_ms = elapsed_ms;
    return rep;
}

inline VerifyReport verify(const IdentityCase& c, std::size_t order) {
    if (order < 2)
        throw config_error("verification order must be >= 2");
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t terms0 = detail::term_counter;
    const Series lhs = build_side(c.lhs, c.params, order);
    const Series rhs = c.mode.uses_rhs_series() || c.rhs == "zero"
                           ? build_side(c.rhs, c.params, order)
                           : Series::zero(order);
    const std::uint64_t terms = detail::term_counter - terms0;
    const auto t1 = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    return verify_prebuilt(c, lhs, rhs, order, terms, ms);
}

inline VerifyReport verify(const std::string& id, std::size_t order) {
    const IdentityCase* c = find_case(id);
    if (!c)
        throw config_error("unknown identity id: " + id);
    return verify(*c, order);
}

/// Run every registry case at the given order, sequentially, collecting
/// reports in registry order. A case that throws is reported with its
/// error message rather than aborting the batch.
inline std::vector<VerifyReport> verify_all(std::size_t order) {
    if (order < 2)
        throw config_error("verification order must be >= 2");
    std::vector<VerifyReport> reports;
    reports.reserve(registry().size());
    for (const auto& c : registry()) {
        try {
            reports.push_back(verify(c, order));
        } catch (const error& e) {
            VerifyReport rep;
            rep.id = c.id;
            rep.order = order;
            rep.pass = false;
            rep.error = e.what();
            reports.push_back(rep);
        }
    }
    return reports;
}

} // namespace qlambert
