#pragma once

#include "ixcalc/integer.hpp"
#include "ixcalc/normal_form.hpp"
#include "ixcalc/word.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ixcalc {

namespace detail {

inline std::string monomial_text(const Monomial& m) {
    std::string out;
    if (m.x_power > 0) {
        out += "x";
        if (m.x_power > 1)
            out += "^" + std::to_string(m.x_power);
    }
    if (m.i_power > 0) {
        if (!out.empty())
            out += ' ';
        out += "I";
        if (m.i_power > 1)
            out += "^" + std::to_string(m.i_power);
    }
    return out;
}

inline std::string monomial_latex(const Monomial& m) {
    std::string out;
    if (m.x_power > 0) {
        out += "x";
        if (m.x_power > 1)
            out += "^{" + std::to_string(m.x_power) + "}";
    }
    if (m.i_power > 0) {
        out += "\\mathrm{I}";
        if (m.i_power > 1)
            out += "^{" + std::to_string(m.i_power) + "}";
    }
    return out;
}

} // namespace detail

/// Plain-text rendering, e.g. "x^2 I^2 - x I^3"; the zero form is "0".
inline std::string render_text(const NormalForm& nf) {
    if (nf.is_zero())
        return "0";
    std::string out;
    for (const auto& [m, c] : nf.terms()) {
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative)
                out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Integer mag = negative ? Integer(-c) : c;
        const std::string mono = detail::monomial_text(m);
        if (mono.empty()) {
            out += mag.str();
        } else {
            if (mag != 1)
                out += mag.str() + " ";
            out += mono;
        }
    }
    return out;
}

/// LaTeX rendering matching the I-as-upright convention, e.g.
/// "x^{2}\mathrm{I}^{2} - x\mathrm{I}^{3}".
inline std::string render_latex(const NormalForm& nf) {
    if (nf.is_zero())
        return "0";
    std::string out;
    for (const auto& [m, c] : nf.terms()) {
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative)
                out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Integer mag = negative ? Integer(-c) : c;
        const std::string mono = detail::monomial_latex(m);
        if (mono.empty()) {
            out += mag.str();
        } else {
            if (mag != 1)
                out += mag.str();
            out += mono;
        }
    }
    return out;
}

/// JSON document for a normal form together with the word it came from.
/// Coefficients are decimal strings since they routinely exceed 64 bits;
/// "k" is the anti-diagonal offset j - S.
inline nlohmann::ordered_json normal_form_json(const Word& w, const NormalForm& nf) {
    const std::uint64_t total_x = w.x_degree();
    const std::uint64_t total_i = w.i_degree();
    nlohmann::ordered_json doc;
    doc["word"] = w.str();
    doc["total_x"] = total_x;
    doc["total_I"] = total_i;
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : nf.terms()) {
        nlohmann::ordered_json term;
        term["k"] = static_cast<std::int64_t>(m.i_power) - static_cast<std::int64_t>(total_i);
        term["x"] = m.x_power;
        term["I"] = m.i_power;
        term["coeff"] = c.str();
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    return doc;
}

inline std::string render_json(const Word& w, const NormalForm& nf) {
    return normal_form_json(w, nf).dump(2) + "\n";
}

/// CSV rendering with header "k,x,I,coeff", one term per line.
inline std::string render_csv(const Word& w, const NormalForm& nf) {
    const std::int64_t total_i = static_cast<std::int64_t>(w.i_degree());
    std::string out = "k,x,I,coeff\n";
    for (const auto& [m, c] : nf.terms()) {
        out += std::to_string(static_cast<std::int64_t>(m.i_power) - total_i);
        out += "," + std::to_string(m.x_power);
        out += "," + std::to_string(m.i_power);
        out += "," + c.str() + "\n";
    }
    return out;
}

using TriangleRows = std::vector<std::vector<Integer>>;

inline std::string render_triangle_text(const TriangleRows& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0)
                out += ' ';
            out += row[k].str();
        }
        out += '\n';
    }
    return out;
}

inline std::string render_triangle_csv(const TriangleRows& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0)
                out += ',';
            out += row[k].str();
        }
        out += '\n';
    }
    return out;
}

inline std::string render_triangle_latex(const TriangleRows& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0)
                out += " & ";
            out += row[k].str();
        }
        out += " \\\\\n";
    }
    return out;
}

/// Rows as an array of arrays of decimal strings.
inline nlohmann::ordered_json triangle_rows_json(const TriangleRows& rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& v : row)
            r.push_back(v.str());
        arr.push_back(std::move(r));
    }
    return arr;
}

} // namespace ixcalc
