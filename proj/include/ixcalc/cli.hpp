#pragma once

#include "ixcalc/bessel.hpp"
#include "ixcalc/normal_form.hpp"
#include "ixcalc/oracle.hpp"
#include "ixcalc/parse.hpp"
#include "ixcalc/render.hpp"
#include "ixcalc/rewrite.hpp"
#include "ixcalc/triangle.hpp"
#include "ixcalc/word.hpp"
#include "ixcalc/word_closed_form.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <new>
#include <ostream>
#include <string>
#include <vector>

namespace ixcalc::cli {

namespace detail {

inline void print_normal_form(std::ostream& out, const std::string& format, const Word& w,
                              const NormalForm& nf) {
    if (format == "text")
        out << render_text(nf) << "\n";
    else if (format == "latex")
        out << render_latex(nf) << "\n";
    else if (format == "json")
        out << render_json(w, nf);
    else
        out << render_csv(w, nf);
}

inline void print_triangle(std::ostream& out, const std::string& format,
                           nlohmann::ordered_json header, const TriangleRows& rows) {
    if (format == "text")
        out << render_triangle_text(rows);
    else if (format == "latex")
        out << render_triangle_latex(rows);
    else if (format == "json") {
        header["rows"] = triangle_rows_json(rows);
        out << header.dump(2) << "\n";
    } else {
        out << render_triangle_csv(rows);
    }
}

/// Test hook: bump the first coefficient so downstream comparisons fail.
inline NormalForm perturb(NormalForm nf) {
    Monomial target{0, 0};
    if (!nf.is_zero())
        target = nf.terms().begin()->first;
    nf.add_term(target, 1);
    return nf;
}

inline void print_report(std::ostream& out, const Word& w, const NormalForm& nf,
                         const EquivalenceReport& report) {
    out << "word: " << w.str() << "\n";
    out << "normal form: " << render_text(nf) << "\n";
    for (const auto& s : report.samples) {
        out << "m=" << s.m << ": lhs = " << s.lhs.str() << ", rhs = " << s.rhs.str()
            << (s.match ? " [ok]" : " [MISMATCH]") << "\n";
    }
    if (report.equal) {
        out << "result: EQUAL (" << report.samples.size() << " samples)\n";
    } else {
        auto first = std::find_if(report.samples.begin(), report.samples.end(),
                                  [](const EquivalenceSample& s) { return !s.match; });
        out << "result: MISMATCH (first at m=" << first->m << ")\n";
    }
}

} // namespace detail

/// Runs one CLI invocation. args excludes the program name. Exit codes:
/// 0 success, 1 verification failure, 2 usage or expression errors.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal ordering in the operator algebra of x and I = integration from 0 to x"};
    app.name("ixcalc");
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"text", "latex", "json", "csv"};

    auto* order = app.add_subcommand("order", "Normal-order a word expression");
    std::string order_expr;
    std::string order_format = "text";
    std::string order_method = "rewrite";
    bool order_perturb = false;
    order->add_option("expr", order_expr, "Word expression, e.g. \"x^2 I x I^3\"")->required();
    order->add_option("--format", order_format, "Output format")
        ->check(CLI::IsMember(formats));
    order->add_option("--method", order_method, "Computation route")
        ->check(CLI::IsMember({"rewrite", "closed-form", "both"}));
    order->add_flag("--perturb", order_perturb)->group("");

    auto* power = app.add_subcommand("power", "Normal-order (x^lambda I^delta)^n");
    std::uint64_t power_lambda = 0, power_delta = 0, power_n = 0;
    std::string power_format = "text";
    power->add_option("--lambda", power_lambda, "x exponent of the base word")
        ->required()
        ->check(CLI::PositiveNumber);
    power->add_option("--delta", power_delta, "I exponent of the base word")
        ->required()
        ->check(CLI::PositiveNumber);
    power->add_option("-n", power_n, "Power of the base word")
        ->required()
        ->check(CLI::PositiveNumber);
    power->add_option("--format", power_format, "Output format")->check(CLI::IsMember(formats));

    auto* bessel = app.add_subcommand("bessel", "Bessel number triangle rows 0..N (OEIS A001498)");
    std::uint64_t bessel_n = 0;
    std::string bessel_format = "text";
    bessel->add_option("-n", bessel_n, "Last row to emit")->required();
    bessel->add_option("--format", bessel_format, "Output format")->check(CLI::IsMember(formats));

    auto* table = app.add_subcommand("table", "Generalized coefficient triangle rows 1..N");
    std::uint64_t table_lambda = 0, table_delta = 0, table_n = 0;
    std::string table_format = "text";
    table->add_option("--lambda", table_lambda, "x exponent of the base word")
        ->required()
        ->check(CLI::PositiveNumber);
    table->add_option("--delta", table_delta, "I exponent of the base word")
        ->required()
        ->check(CLI::PositiveNumber);
    table->add_option("-n", table_n, "Last row to emit")->required()->check(CLI::PositiveNumber);
    table->add_option("--format", table_format, "Output format")->check(CLI::IsMember(formats));

    auto* verify = app.add_subcommand("verify", "Check a word against the rational-arithmetic oracle");
    std::string verify_expr;
    std::uint64_t verify_samples = 0;
    bool verify_perturb = false;
    verify->add_option("expr", verify_expr, "Word expression")->required();
    verify->add_option("--samples", verify_samples, "Number of monomials x^m to evaluate")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--perturb", verify_perturb)->group("");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (order->parsed()) {
            const Word w = parse_word(order_expr);
            NormalForm nf;
            if (order_method == "rewrite") {
                nf = normal_order(w);
            } else if (order_method == "closed-form") {
                nf = word_closed_form(w);
            } else {
                nf = normal_order(w);
                NormalForm closed = word_closed_form(w);
                if (order_perturb)
                    closed = detail::perturb(std::move(closed));
                if (nf != closed) {
                    err << "error: rewrite and closed-form results disagree for '" << w.str()
                        << "'\n";
                    return 1;
                }
            }
            detail::print_normal_form(out, order_format, w, nf);
            return 0;
        }

        if (power->parsed()) {
            const NormalForm nf = general_power_normal_form(power_lambda, power_delta, power_n);
            const Word base({{Generator::X, power_lambda}, {Generator::I, power_delta}});
            detail::print_normal_form(out, power_format, word_power(base, power_n), nf);
            return 0;
        }

        if (bessel->parsed()) {
            const BesselTriangle triangle(bessel_n);
            nlohmann::ordered_json header;
            header["triangle"] = "bessel";
            header["max_row"] = bessel_n;
            detail::print_triangle(out, bessel_format, std::move(header), triangle.rows());
            return 0;
        }

        if (table->parsed()) {
            const GeneralizedTriangle triangle(table_lambda, table_delta, table_n);
            nlohmann::ordered_json header;
            header["triangle"] = "generalized";
            header["lambda"] = table_lambda;
            header["delta"] = table_delta;
            header["rows_from"] = 1;
            detail::print_triangle(out, table_format, std::move(header), triangle.rows());
            return 0;
        }

        // verify
        const Word w = parse_word(verify_expr);
        NormalForm nf = normal_order(w);
        if (verify_perturb)
            nf = detail::perturb(std::move(nf));
        const EquivalenceReport report = verify_samples > 0
                                             ? verify_equivalence(w, nf, verify_samples)
                                             : verify_equivalence(w, nf);
        detail::print_report(out, w, nf, report);
        return report.equal ? 0 : 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::bad_alloc&) {
        err << "error: requested result is too large to materialize\n";
        return 2;
    }
}

} // namespace ixcalc::cli
