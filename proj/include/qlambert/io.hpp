// Copyright (c) 2026 qlambert contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

/// \file io.hpp
/// CSV and JSON serialization. Coefficients travel as decimal strings in
/// every format; they outgrow native integer widths long before the
/// orders of interest.

#include <string>

#include <json.hpp>

#include "series.hpp"
#include "divisor.hpp"
#include "verify.hpp"

namespace qlambert {

using json = nlohmann::json;

inline std::string to_decimal(const Int& v) { return v.str(); }

inline std::string series_to_csv(const Series& s) {
    std::string out = "exponent,coefficient\n";
    for (std::size_t e = 0; e < s.order(); ++e)
        out += std::to_string(e) + "," + to_decimal(s.coeff(e)) + "\n";
    return out;
}

inline json series_to_json(const Series& s) {
    json arr = json::array();
    for (std::size_t e = 0; e < s.order(); ++e)
        arr.push_back({{"e", e}, {"c", to_decimal(s.coeff(e))}});
    return arr;
}

inline std::string sigma_table_to_csv(const SigmaTable& t) {
    std::string out = "n,sigma\n";
    for (std::size_t n = 1; n <= t.limit; ++n)
        out += std::to_string(n) + "," + to_decimal(t.values[n - 1]) + "\n";
    return out;
}

inline json sigma_table_to_json(const SigmaTable& t) {
    json arr = json::array();
    for (std::size_t n = 1; n <= t.limit; ++n)
        arr.push_back({{"n", n}, {"c", to_decimal(t.values[n - 1])}});
    return arr;
}

inline json report_to_json(const VerifyReport& r) {
    json j = {
        {"id", r.id},
        {"order", r.order},
        {"pass", r.pass},
        {"first_mismatch", nullptr},
        {"terms", r.terms_enumerated},
        {"elapsed_ms", r.elapsed_ms},
    };
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"e", r.first_mismatch->exponent},
                               {"lhs", to_decimal(r.first_mismatch->lhs)},
                               {"rhs", to_decimal(r.first_mismatch->rhs)}};
    }
    if (!r.error.empty())
        j["error"] = r.error;
    return j;
}

inline VerifyReport report_from_json(const json& j) {
    VerifyReport r;
    r.id = j.at("id").get<std::string>();
    r.order = j.at("order").get<std::size_t>();
    r.pass = j.at("pass").get<bool>();
    if (!j.at("first_mismatch").is_null()) {
        const json& m = j.at("first_mismatch");
        Mismatch mm;
        mm.exponent = m.at("e").get<std::size_t>();
        mm.lhs = Int(m.at("lhs").get<std::string>());
        mm.rhs = Int(m.at("rhs").get<std::string>());
        r.first_mismatch = mm;
    }
    r.terms_enumerated = j.at("terms").get<std::uint64_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    if (j.contains("error"))
        r.error = j.at("error").get<std::string>();
    return r;
}

inline std::string report_csv_header() {
    return "id,order,pass,mismatch_e,mismatch_lhs,mismatch_rhs,terms,"
           "elapsed_ms\n";
}

inline std::string report_to_csv_row(const VerifyReport& r) {
    std::string row = r.id + "," + std::to_string(r.order) + "," +
                      (r.pass ? "true" : "false") + ",";
    if (r.first_mismatch) {
        row += std::to_string(r.first_mismatch->exponent) + "," +
               to_decimal(r.first_mismatch->lhs) + "," +
               to_decimal(r.first_mismatch->rhs);
    } else {
        row += ",,";
    }
    row += "," + std::to_string(r.terms_enumerated) + "," +
           std::to_string(r.elapsed_ms) + "\n";
    return row;
}

inline std::string report_to_plain(const VerifyReport& r) {
    std::string line = r.id + "  order=" + std::to_string(r.order);
    if (!r.error.empty())
        return line + "  ERROR: " + r.error + "\n";
    if (r.pass) {
        line += "  PASS";
    } else {
        line += "  FAIL  first mismatch at q^" +
                std::to_string(r.first_mismatch->exponent) +
                ": lhs=" + to_decimal(r.first_mismatch->lhs) +
                " rhs=" + to_decimal(r.first_mismatch->rhs);
    }
    line += "  (terms=" + std::to_string(r.terms_enumerated) + ", " +
            std::to_string(r.elapsed_ms) + " ms)\n";
    return line;
}

} // namespace qlambert
