// Copyright (c) 2026 qlambert contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

// Command-line surface: list and verify identities, dump coefficient
// tables, run the sigma_k scanner.
//
// Exit codes: 0 all requested checks pass; 1 a verified identity has a
// mismatching coefficient; 2 usage or configuration error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <qlambert/qlambert.hpp>

namespace {

using namespace qlambert;

struct CliConfig {
    std::size_t order = 256;
    std::string format = "plain";
    std::string output;

    std::string id;       // verify
    bool all = false;     // verify
    std::vector<std::string> params; // key=value overrides
    std::optional<std::size_t> corrupt; // fault-injection aid

    std::string series;   // coeff, table
    std::size_t exponent = 0; // coeff
    std::size_t limit = 50;   // table (sigma tables)
    unsigned k = 2;           // scan
};

void write_out(const CliConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.output);
    if (!f)
        throw config_error("cannot open output file: " + cfg.output);
    f << text;
}

BuilderParams parse_params(const BuilderParams& base,
                           const std::vector<std::string>& kvs) {
    BuilderParams p = base;
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size())
            throw config_error("malformed --param (want key=value): " + kv);
        const std::string key = kv.substr(0, eq);
        unsigned long val = 0;
        try {
            val = std::stoul(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw config_error("non-numeric --param value: " + kv);
        }
        if (key == "a")
            p.a = val;
        else if (key == "r")
            p.r = val;
        else if (key == "s")
            p.s = val;
        else if (key == "j")
            p.j = val;
        else if (key == "k")
            p.k = static_cast<unsigned>(val);
        else
            throw config_error("unknown --param key: " + key);
    }
    p.validate();
    return p;
}

void warn_if_below_range(const IdentityCase& c, const BuilderParams& p,
                         std::size_t order) {
    for (const std::string& side : {c.lhs, c.rhs}) {
        if (order_below_dyadic_range(side, p, order)) {
            std::cerr << "warning: order " << order << " <= 2^" << p.a
                      << "; " << side
                      << " has no complete exponent block in range\n";
            return;
        }
    }
}

int cmd_list(const CliConfig& cfg) {
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& c : registry()) {
            arr.push_back({{"id", c.id},
                           {"description", c.description},
                           {"lhs", c.lhs},
                           {"rhs", c.rhs},
                           {"mode", c.mode.describe()},
                           {"statement", c.statement}});
        }
        write_out(cfg, arr.dump(2) + "\n");
        return 0;
    }
    if (cfg.format == "csv") {
        std::string out = "id,lhs,rhs,mode,statement\n";
        for (const auto& c : registry())
            out += c.id + "," + c.lhs + "," + c.rhs + "," +
                   c.mode.describe() + ",\"" + c.statement + "\"\n";
        write_out(cfg, out);
        return 0;
    }
    std::string out;
    for (const auto& c : registry()) {
        out += c.id + "\n    " + c.description + "\n    mode: " +
               c.mode.describe() + "\n    " + c.statement + "\n";
    }
    write_out(cfg, out);
    return 0;
}

VerifyReport run_one(const IdentityCase& c, const BuilderParams& p,
                     const CliConfig& cfg) {
    warn_if_below_range(c, p, cfg.order);
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t terms0 = detail::term_counter;
    Series lhs = build_side(c.lhs, p, cfg.order);
    const Series rhs = c.mode.uses_rhs_series() || c.rhs == "zero"
                           ? build_side(c.rhs, p, cfg.order)
                           : Series::zero(cfg.order);
    if (cfg.corrupt)
        lhs.add_at(*cfg.corrupt, 1);
    const std::uint64_t terms = detail::term_counter - terms0;
    const auto t1 = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    return verify_prebuilt(c, lhs, rhs, cfg.order, terms, ms);
}

int cmd_verify(const CliConfig& cfg) {
    if (cfg.order < 2)
        throw config_error("verification order must be >= 2");
    if (!cfg.all && cfg.id.empty())
        throw config_error("verify needs --id or --all");

    std::vector<VerifyReport> reports;
    if (cfg.all) {
        for (const auto& c : registry())
            reports.push_back(run_one(c, parse_params(c.params, cfg.params),
                                      cfg));
    } else {
        const IdentityCase* c = find_case(cfg.id);
        if (!c)
            throw config_error("unknown identity id: " + cfg.id);
        reports.push_back(run_one(*c, parse_params(c->params, cfg.params),
                                  cfg));
    }

    std::string out;
    if (cfg.format == "json") {
        if (reports.size() == 1) {
            out = report_to_json(reports[0]).dump(2) + "\n";
        } else {
            json arr = json::array();
            for (const auto& r : reports)
                arr.push_back(report_to_json(r));
            out = arr.dump(2) + "\n";
        }
    } else if (cfg.format == "csv") {
        out = report_csv_header();
        for (const auto& r : reports)
            out += report_to_csv_row(r);
    } else {
        for (const auto& r : reports)
            out += report_to_plain(r);
        std::size_t passed = 0;
        for (const auto& r : reports)
            passed += r.pass ? 1 : 0;
        if (reports.size() > 1)
            out += std::to_string(passed) + "/" +
                   std::to_string(reports.size()) + " identities pass\n";
    }
    write_out(cfg, out);

    for (const auto& r : reports)
        if (!r.pass)
            return 1;
    return 0;
}

int cmd_coeff(const CliConfig& cfg) {
    const BuilderParams p = parse_params(BuilderParams{}, cfg.params);
    if (order_below_dyadic_range(cfg.series, p, cfg.order))
        std::cerr << "warning: order " << cfg.order << " <= 2^" << p.a
                  << "; " << cfg.series
                  << " has no complete exponent block in range\n";
    const Series s = build_side(cfg.series, p, cfg.order);
    write_out(cfg, to_decimal(s.coeff(cfg.exponent)) + "\n");
    return 0;
}

int cmd_table(const CliConfig& cfg) {
    // "sigma<k>" names a divisor-sum table; anything else is a series id.
    if (cfg.series.rfind("sigma", 0) == 0 && cfg.series.size() > 5 &&
        cfg.series.find_first_not_of("0123456789", 5) == std::string::npos) {
        const unsigned k = static_cast<unsigned>(std::stoul(cfg.series.substr(5)));
        const SigmaTable t = sigma_sieve(k, cfg.limit);
        if (cfg.format == "json") {
            write_out(cfg, sigma_table_to_json(t).dump(2) + "\n");
        } else if (cfg.format == "csv") {
            write_out(cfg, sigma_table_to_csv(t));
        } else {
            std::string out;
            for (std::size_t n = 1; n <= t.limit; ++n)
                out += "sigma_" + std::to_string(k) + "(" +
                       std::to_string(n) + ") = " +
                       to_decimal(t.values[n - 1]) + "\n";
            write_out(cfg, out);
        }
        return 0;
    }

    const BuilderParams p = parse_params(BuilderParams{}, cfg.params);
    const Series s = build_side(cfg.series, p, cfg.order);
    if (cfg.format == "json") {
        write_out(cfg, series_to_json(s).dump(2) + "\n");
    } else if (cfg.format == "csv") {
        write_out(cfg, series_to_csv(s));
    } else {
        std::string out;
        for (std::size_t e = 0; e < s.order(); ++e)
            out += "q^" + std::to_string(e) + ": " + to_decimal(s.coeff(e)) +
                   "\n";
        write_out(cfg, out);
    }
    return 0;
}

int cmd_scan(const CliConfig& cfg) {
    if (cfg.k < 1)
        throw config_error("scan needs k >= 1");
    const Series candidate = scanner_candidate(cfg.k, cfg.order);
    const std::size_t limit = cfg.order > 2 ? (cfg.order - 1) / 2 : 0;
    SigmaTable t;
    if (limit > 0)
        t = sigma_sieve(cfg.k, limit);

    if (cfg.format == "json") {
        json arr = json::array();
        for (std::size_t n = 1; n <= limit; ++n) {
            const Int& sig = t.values[n - 1];
            const Int& cand = candidate.coeff(2 * n);
            arr.push_back({{"n", n},
                           {"e", 2 * n},
                           {"sigma", to_decimal(sig)},
                           {"candidate", to_decimal(cand)},
                           {"diff", to_decimal(cand - sig)}});
        }
        write_out(cfg, arr.dump(2) + "\n");
        return 0;
    }
    if (cfg.format == "csv") {
        std::string out = "n,e,sigma,candidate,diff\n";
        for (std::size_t n = 1; n <= limit; ++n) {
            const Int& sig = t.values[n - 1];
            const Int& cand = candidate.coeff(2 * n);
            out += std::to_string(n) + "," + std::to_string(2 * n) + "," +
                   to_decimal(sig) + "," + to_decimal(cand) + "," +
                   to_decimal(cand - sig) + "\n";
        }
        write_out(cfg, out);
        return 0;
    }
    std::string out =
        "exploratory scan, k=" + std::to_string(cfg.k) +
        ": sigma_k(n) vs the weighted double sum (w(m)=m^(k-1)) at q^(2n); "
        "asserts nothing\n";
    out += "n\te\tsigma\tcandidate\tdiff\n";
    for (std::size_t n = 1; n <= limit; ++n) {
        const Int& sig = t.values[n - 1];
        const Int& cand = candidate.coeff(2 * n);
        out += std::to_string(n) + "\t" + std::to_string(2 * n) + "\t" +
               to_decimal(sig) + "\t" + to_decimal(cand) + "\t" +
               to_decimal(cand - sig) + "\n";
    }
    write_out(cfg, out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CliConfig cfg;
    CLI::App app{"exact truncated q-series engine and identity checker"};
    app.require_subcommand(1);

    app.add_option("--order", cfg.order,
                   "truncation order (coefficients of q^0..q^(order-1))")
        ->envname("QLAMBERT_ORDER")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", cfg.output, "write output to a file");

    CLI::App* list = app.add_subcommand("list", "list registered identities");
    list->fallthrough();

    CLI::App* verify =
        app.add_subcommand("verify", "verify one or all identities");
    verify->fallthrough();
    verify->add_option("--id", cfg.id, "identity id (see list)");
    verify->add_flag("--all", cfg.all, "verify every registered identity");
    verify->add_option("--param", cfg.params,
                       "override a builder parameter (a=, r=, s=, j=, k=)");
    verify
        ->add_option("--corrupt", cfg.corrupt,
                     "fault-injection aid: add 1 to the built left side at "
                     "this exponent before comparing")
        ->check(CLI::NonNegativeNumber);

    CLI::App* coeff =
        app.add_subcommand("coeff", "print one coefficient of a series");
    coeff->fallthrough();
    coeff->add_option("--series", cfg.series, "series id (see list)")
        ->required();
    coeff->add_option("--e", cfg.exponent, "exponent to extract")->required();
    coeff->add_option("--param", cfg.params,
                      "builder parameter (a=, r=, s=, j=, k=)");

    CLI::App* table = app.add_subcommand(
        "table", "dump a coefficient table or a sigma_k table");
    table->fallthrough();
    table
        ->add_option("--series", cfg.series,
                     "series id, or sigma<k> for a divisor-sum table")
        ->required();
    table->add_option("--limit", cfg.limit, "last n for sigma tables")
        ->capture_default_str();
    table->add_option("--param", cfg.params,
                      "builder parameter (a=, r=, s=, j=, k=)");

    CLI::App* scan = app.add_subcommand(
        "scan", "tabulate sigma_k against the weighted double sum");
    scan->fallthrough();
    scan->add_option("--k", cfg.k, "sigma power")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (list->parsed())
            return cmd_list(cfg);
        if (verify->parsed())
            return cmd_verify(cfg);
        if (coeff->parsed())
            return cmd_coeff(cfg);
        if (table->parsed())
            return cmd_table(cfg);
        if (scan->parsed())
            return cmd_scan(cfg);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
