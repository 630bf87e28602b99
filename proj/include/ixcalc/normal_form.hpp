#pragma once

#include "ixcalc/integer.hpp"
#include "ixcalc/word.hpp"

#include <compare>
#include <cstdint>
#include <map>

namespace ixcalc {

/// Basis monomial x^i I^j of the normal-ordered algebra.
struct Monomial {
    std::uint64_t x_power = 0; // i
    std::uint64_t i_power = 0; // j

    /// Term order: ascending I power, then ascending x power. On the
    /// anti-diagonal of a single word this is ascending offset k.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.i_power <=> b.i_power; c != 0)
            return c;
        return a.x_power <=> b.x_power;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Sparse exact-integer linear combination of basis monomials x^i I^j.
/// Zero coefficients are never stored; iteration over terms is ordered,
/// so every rendering of a given value is byte-reproducible.
class NormalForm {
public:
    using TermMap = std::map<Monomial, Integer>;

    NormalForm() = default;

    static NormalForm monomial(Monomial m, Integer coeff = 1) {
        NormalForm nf;
        nf.add_term(m, std::move(coeff));
        return nf;
    }

    /// The identity operator x^0 I^0.
    static NormalForm one() { return monomial({0, 0}); }

    const TermMap& terms() const& { return terms_; }
    // by value on rvalues, so `for (... : f(x).terms())` never dangles
    TermMap terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient at m, zero if absent.
    Integer coeff(Monomial m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    /// Accumulates c into the coefficient at m, pruning on cancellation.
    void add_term(Monomial m, Integer c) {
        if (c == 0)
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    NormalForm& operator+=(const NormalForm& other) {
        for (const auto& [m, c] : other.terms_)
            add_term(m, c);
        return *this;
    }

    friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }

    friend NormalForm operator*(const NormalForm& a, const Integer& c) {
        NormalForm out;
        if (c == 0)
            return out;
        for (const auto& [m, coeff] : a.terms_)
            out.terms_.emplace_hint(out.terms_.end(), m, coeff * c);
        return out;
    }

    friend NormalForm operator*(const Integer& c, const NormalForm& a) { return a * c; }

    bool operator==(const NormalForm&) const = default;

    /// True when every term lies on the anti-diagonal i + j = R + S with
    /// j >= S and i <= R. Normal forms of a single word with degrees
    /// (R, S) always satisfy this; general linear combinations need not.
    bool on_anti_diagonal(std::uint64_t r, std::uint64_t s) const {
        for (const auto& [m, c] : terms_) {
            if (m.x_power + m.i_power != r + s)
                return false;
            if (m.i_power < s || m.x_power > r)
                return false;
        }
        return true;
    }

private:
    TermMap terms_;
};

inline NormalForm nf_add(const NormalForm& a, const NormalForm& b) { return a + b; }
inline NormalForm nf_scale(const NormalForm& a, const Integer& c) { return a * c; }
inline bool nf_equal(const NormalForm& a, const NormalForm& b) { return a == b; }

} // namespace ixcalc
