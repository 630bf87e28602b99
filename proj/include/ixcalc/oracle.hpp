#pragma once

#include "ixcalc/normal_form.hpp"
#include "ixcalc/rational.hpp"
#include "ixcalc/word.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ixcalc {

/// c * x^d with an exact rational coefficient. The zero value is stored
/// with degree 0.
struct RationalMonomial {
    Rational coeff;
    std::uint64_t degree = 0;

    RationalMonomial() = default;
    RationalMonomial(Rational c, std::uint64_t d) : coeff(std::move(c)), degree(d) {
        if (coeff == 0)
            degree = 0;
    }

    bool operator==(const RationalMonomial&) const = default;
};

/// Sparse polynomial over exact rationals, ascending-degree iteration,
/// zero coefficients pruned.
class RationalPolynomial {
public:
    using TermMap = std::map<std::uint64_t, Rational>;

    RationalPolynomial() = default;

    static RationalPolynomial monomial(const RationalMonomial& m) {
        RationalPolynomial p;
        p.add_term(m.degree, m.coeff);
        return p;
    }

    const TermMap& terms() const& { return terms_; }
    TermMap terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::uint64_t degree, const Rational& c) {
        if (c == 0)
            return;
        auto it = terms_.find(degree);
        if (it == terms_.end()) {
            terms_.emplace(degree, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    RationalPolynomial& operator+=(const RationalPolynomial& other) {
        for (const auto& [d, c] : other.terms_)
            add_term(d, c);
        return *this;
    }

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
        return a += b;
    }

    bool operator==(const RationalPolynomial&) const = default;

    /// "p/q x^d + ..." with ascending degree; "0" when empty.
    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [d, c] : terms_) {
            const bool negative = c < 0;
            if (out.empty()) {
                if (negative)
                    out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            out += rational_str(negative ? Rational(-c) : c);
            if (d > 0) {
                out += " x";
                if (d > 1)
                    out += "^" + std::to_string(d);
            }
        }
        return out;
    }

private:
    TermMap terms_;
};

/// Image of x^m under the word, computed purely operationally: each x step
/// raises the degree, each I step integrates a monomial,
/// c x^d -> c/(d+1) x^{d+1}. This path never touches the commutation
/// identity, so it is an independent check on the symbolic engine.
inline RationalMonomial apply_word_to_monomial(const Word& w, std::uint64_t m) {
    Rational coeff = 1;
    std::uint64_t degree = m;
    const auto& blocks = w.blocks();
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        if (it->gen == Generator::X) {
            degree += it->exp;
        } else {
            for (std::uint64_t t = 0; t < it->exp; ++t) {
                coeff /= Integer(degree + 1);
                ++degree;
            }
        }
    }
    return {std::move(coeff), degree};
}

/// Image of x^m under a normal form, from the basis action
/// x^i I^j x^m = (prod_{t=1}^{j} 1/(m+t)) x^{m+i+j}. The product form
/// avoids building factorials.
inline RationalPolynomial apply_nf_to_monomial(const NormalForm& nf, std::uint64_t m) {
    RationalPolynomial out;
    for (const auto& [mono, c] : nf.terms()) {
        Rational value(c);
        for (std::uint64_t t = 1; t <= mono.i_power; ++t)
            value /= Integer(m + t);
        out.add_term(m + mono.x_power + mono.i_power, value);
    }
    return out;
}

struct EquivalenceSample {
    std::uint64_t m = 0;
    RationalPolynomial lhs; // word applied to x^m
    RationalPolynomial rhs; // normal form applied to x^m
    bool match = false;
};

struct EquivalenceReport {
    bool equal = false;
    std::vector<EquivalenceSample> samples;
};

/// Certifies that nf acts like w by evaluating both on x^m for
/// sample_count values of m. All samples are evaluated and recorded even
/// after a mismatch, so failures stay debuggable.
inline EquivalenceReport verify_equivalence(const Word& w, const NormalForm& nf,
                                            std::size_t sample_count) {
    EquivalenceReport report;
    report.equal = true;
    report.samples.reserve(sample_count);
    for (std::uint64_t m = 0; m < sample_count; ++m) {
        EquivalenceSample sample;
        sample.m = m;
        sample.lhs = RationalPolynomial::monomial(apply_word_to_monomial(w, m));
        sample.rhs = apply_nf_to_monomial(nf, m);
        sample.match = sample.lhs == sample.rhs;
        report.equal = report.equal && sample.match;
        report.samples.push_back(std::move(sample));
    }
    return report;
}

/// Default sample count S + T + 1 (total I degree plus term count plus
/// one): the maps m -> m!/(m+j)! for distinct j are linearly independent,
/// so this many agreements pin every coefficient on an anti-diagonal.
inline EquivalenceReport verify_equivalence(const Word& w, const NormalForm& nf) {
    return verify_equivalence(w, nf, w.i_degree() + nf.size() + 1);
}

} // namespace ixcalc
