/*
   Copyright 2026 The degenfact authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "degenfact/degenfact.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace degenfact {

namespace detail {

struct CliConfig {
    std::string family;
    std::size_t n_max = 12;
    std::size_t k_max = 0;
    bool k_max_set = false;
    std::size_t n = 0;
    std::size_t k = 0;
    std::string lambda = "symbolic";
    std::string x;
    std::string r = "1";
    std::string format;
    std::string output;
    std::vector<std::string> lambda_modes;
    unsigned jobs = 0;
};

/// Writes to --output when given, stdout otherwise. Returns false when the
/// file cannot be opened.
inline bool emit(const std::string& output, const std::string& payload, std::ostream& out,
                 std::ostream& err) {
    if (output.empty()) {
        out << payload;
        return true;
    }
    std::ofstream file(output);
    if (!file) {
        err << "degenfact: cannot open output file '" << output << "'\n";
        return false;
    }
    file << payload;
    return true;
}

inline int do_table(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto family = family_from_string(cfg.family);
    if (!family) {
        err << "degenfact: unknown family '" << cfg.family << "'\n";
        return 2;
    }
    const LambdaMode mode = LambdaMode::parse(cfg.lambda);
    const Rational r = Rational::parse(cfg.r);
    const Rational x = cfg.x.empty() ? Rational(0) : Rational::parse(cfg.x);
    const std::size_t k_max = cfg.k_max_set ? cfg.k_max : cfg.n_max;
    const NumberTriangle tri =
        build_triangle(*family, cfg.n_max, k_max, mode, r, x, resolve_jobs(cfg.jobs));
    const std::string format = cfg.format.empty() ? "csv" : cfg.format;
    std::string payload;
    if (format == "csv") {
        std::ostringstream os;
        write_triangle_csv(tri, os);
        payload = os.str();
    } else if (format == "json") {
        payload = triangle_to_json(tri).dump(2) + "\n";
    } else {
        err << "degenfact: unknown format '" << format << "'\n";
        return 2;
    }
    return emit(cfg.output, payload, out, err) ? 0 : 2;
}

inline int do_value(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto family = family_from_string(cfg.family);
    if (!family) {
        err << "degenfact: unknown family '" << cfg.family << "'\n";
        return 2;
    }
    const LambdaMode mode = LambdaMode::parse(cfg.lambda);
    ordered_json value;
    switch (*family) {
        case Family::stirling_first:
            value = stirling_first(cfg.n, cfg.k).str();
            break;
        case Family::central_first:
            value = central_first_kind(cfg.n, cfg.k).str();
            break;
        case Family::central_second:
            value = central_second_kind(cfg.n, cfg.k).str();
            break;
        case Family::lambda_stirling_second:
            value = ring_to_json(lambda_stirling_second(cfg.n, cfg.k, mode));
            break;
        case Family::degenerate_central_second:
            value = ring_to_json(degenerate_central_second(cfg.n, cfg.k, mode));
            break;
        case Family::degenerate_central_first:
            value = ring_to_json(degenerate_central_first(cfg.n, cfg.k, mode));
            break;
        case Family::degenerate_euler: {
            const Rational r = Rational::parse(cfg.r);
            const Rational x = cfg.x.empty() ? Rational(0) : Rational::parse(cfg.x);
            const XPoly e = degenerate_euler(cfg.n, r, XMode::concrete(x), mode);
            value = ring_to_json(e.coeff(0));
            break;
        }
    }
    return emit(cfg.output, value.dump() + "\n", out, err) ? 0 : 2;
}

inline int do_poly(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const LambdaMode mode = LambdaMode::parse(cfg.lambda);
    const XMode x = XMode::parse(cfg.x.empty() ? "symbolic" : cfg.x);
    ordered_json value;
    if (cfg.family == "central") {
        value = ring_to_json(central_factorial_polynomial(cfg.n));
    } else {
        const auto family = family_from_string(cfg.family);
        if (!family) {
            err << "degenfact: unknown family '" << cfg.family << "'\n";
            return 2;
        }
        if (*family == Family::degenerate_central_second) {
            value = ring_to_json(degenerate_central_second_poly(cfg.n, cfg.k, x, mode));
        } else if (*family == Family::degenerate_euler) {
            value = ring_to_json(degenerate_euler(cfg.n, Rational::parse(cfg.r), x, mode));
        } else {
            err << "degenfact: family '" << cfg.family << "' has no polynomial form"
                << " (use T2, euler, or central)\n";
            return 2;
        }
    }
    return emit(cfg.output, value.dump() + "\n", out, err) ? 0 : 2;
}

inline int do_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<LambdaMode> modes;
    if (cfg.lambda_modes.empty()) {
        modes = default_verify_modes();
    } else {
        for (const std::string& m : cfg.lambda_modes) {
            modes.push_back(LambdaMode::parse(m));
        }
    }
    const std::size_t k_max = cfg.k_max_set ? cfg.k_max : cfg.n_max;
    const VerifyReport report = run_all(cfg.n_max, k_max, modes, resolve_jobs(cfg.jobs));
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    std::string payload;
    if (format == "json") {
        payload = report_json(report).dump(2) + "\n";
    } else if (format == "text") {
        payload = report_text(report);
    } else {
        err << "degenfact: unknown format '" << format << "'\n";
        return 2;
    }
    if (!emit(cfg.output, payload, out, err)) {
        return 2;
    }
    err << "verify: " << report.checks.size() << " checks in " << report.total_seconds << "s\n";
    return report.all_passed() ? 0 : 1;
}

}  // namespace detail

/// Runs the command-line driver on already-split arguments (no program
/// name). Exit codes: 0 success / all checks pass, 1 verification failure,
/// 2 usage or I/O error.
inline int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact tables and identity verification for degenerate central factorial"
                 " numbers and their relatives"};
    app.name("degenfact");
    app.require_subcommand(1);
    detail::CliConfig cfg;

    CLI::App* table = app.add_subcommand("table", "Emit one family's triangle as CSV or JSON");
    table->add_option("--family", cfg.family,
                      "Family: S1, t, T, S2l, T2, t1l, euler (canonical names accepted)")
        ->required();
    table->add_option("--n-max", cfg.n_max, "Largest row index")->required();
    auto* tk = table->add_option("--k-max", cfg.k_max, "Largest column index (default n-max)");
    table->add_option("--lambda", cfg.lambda, "'symbolic' or a rational p/q (default symbolic)");
    table->add_option("--r", cfg.r, "Euler order r as a rational (euler family only)");
    table->add_option("--x", cfg.x, "Euler evaluation point as a rational (euler family only)");
    table->add_option("--format", cfg.format, "csv (default) or json");
    table->add_option("--output", cfg.output, "Output path (default stdout)");
    table->add_option("--jobs", cfg.jobs, "Worker threads (default $DEGENFACT_JOBS or 1)");

    CLI::App* value = app.add_subcommand("value", "Print one table entry");
    value->add_option("--family", cfg.family, "Family name")->required();
    value->add_option("--n", cfg.n, "Row index")->required();
    value->add_option("--k", cfg.k, "Column index");
    value->add_option("--lambda", cfg.lambda, "'symbolic' or a rational p/q");
    value->add_option("--r", cfg.r, "Euler order r (euler family only)");
    value->add_option("--x", cfg.x, "Euler evaluation point (euler family only)");
    value->add_option("--output", cfg.output, "Output path (default stdout)");

    CLI::App* poly = app.add_subcommand("poly", "Print a polynomial value (nested coefficient arrays)");
    poly->add_option("--family", cfg.family, "T2, euler, or central")->required();
    poly->add_option("--n", cfg.n, "Row index")->required();
    poly->add_option("--k", cfg.k, "Column index (T2 only)");
    poly->add_option("--x", cfg.x, "'symbolic' (default) or a rational p/q");
    poly->add_option("--lambda", cfg.lambda, "'symbolic' or a rational p/q");
    poly->add_option("--r", cfg.r, "Euler order r (euler family only)");
    poly->add_option("--output", cfg.output, "Output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "Run the identity verification suite");
    verify->add_option("--n-max", cfg.n_max, "Sweep bound for n (default 12)");
    auto* vk = verify->add_option("--k-max", cfg.k_max, "Sweep bound for k (default n-max)");
    verify->add_option("--lambda", cfg.lambda_modes,
                       "Lambda mode, repeatable (default: symbolic 1/3 0)");
    verify->add_option("--format", cfg.format, "text (default) or json");
    verify->add_option("--output", cfg.output, "Output path (default stdout)");
    verify->add_option("--jobs", cfg.jobs, "Worker threads (default $DEGENFACT_JOBS or 1)");

    try {
        std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "degenfact: " << e.what() << "\n\n" << app.help();
        return 2;
    }
    cfg.k_max_set = tk->count() > 0 || vk->count() > 0;

    try {
        if (table->parsed()) {
            return detail::do_table(cfg, out, err);
        }
        if (value->parsed()) {
            return detail::do_value(cfg, out, err);
        }
        if (poly->parsed()) {
            return detail::do_poly(cfg, out, err);
        }
        return detail::do_verify(cfg, out, err);
    } catch (const std::exception& e) {
        err << "degenfact: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace degenfact
