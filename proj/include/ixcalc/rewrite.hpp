#pragma once

#include "ixcalc/integer.hpp"
#include "ixcalc/normal_form.hpp"
#include "ixcalc/word.hpp"

#include <cstdint>
#include <stdexcept>

namespace ixcalc {

/// Left multiplication by x^r: shifts every x exponent up by r.
inline NormalForm apply_x(const NormalForm& nf, std::uint64_t r) {
    if (r == 0)
        return nf;
    NormalForm out;
    for (const auto& [m, c] : nf.terms())
        out.add_term({m.x_power + r, m.i_power}, c);
    return out;
}

/// Left multiplication by I via the integration-by-parts identity
///
///   I(x^a I^b) = sum_{j=0}^{a} (-1)^j (a)_j x^{a-j} I^{b+1+j},
///
/// extended linearly over the terms of nf.
inline NormalForm apply_I(const NormalForm& nf) {
    NormalForm out;
    for (const auto& [m, c] : nf.terms()) {
        Integer ff = 1; // (a)_j, built incrementally
        for (std::uint64_t j = 0; j <= m.x_power; ++j) {
            Integer contrib = c * ff;
            if (j % 2 == 1)
                contrib = -contrib;
            out.add_term({m.x_power - j, m.i_power + 1 + j}, std::move(contrib));
            ff *= Integer(m.x_power - j);
        }
    }
    return out;
}

/// I^delta applied to the single monomial x^alpha I^beta, collapsed to one
/// sum: the nested weakly increasing indices of delta-fold integration by
/// parts count weak compositions, giving
///
///   I^delta(x^a I^b) = sum_{k=0}^{a} (-1)^k (a)_k C(k+delta-1, delta-1)
///                      x^{a-k} I^{b+delta+k}.
///
/// delta = 0 is rejected; callers wanting the identity use the input as is.
inline NormalForm apply_I_power(std::uint64_t alpha, std::uint64_t beta, std::uint64_t delta) {
    if (delta == 0)
        throw std::invalid_argument("apply_I_power: delta must be >= 1");
    NormalForm out;
    Integer ff = 1; // (alpha)_k
    for (std::uint64_t k = 0; k <= alpha; ++k) {
        Integer contrib = ff * weak_composition_count(k, delta);
        if (k % 2 == 1)
            contrib = -contrib;
        out.add_term({alpha - k, beta + delta + k}, std::move(contrib));
        ff *= Integer(alpha - k);
    }
    return out;
}

/// Linear extension of the single-sum form to a whole normal form.
inline NormalForm apply_I_power(const NormalForm& nf, std::uint64_t delta) {
    if (delta == 0)
        return nf;
    NormalForm out;
    for (const auto& [m, c] : nf.terms())
        out += apply_I_power(m.x_power, m.i_power, delta) * c;
    return out;
}

/// Applies the word on the left of an already normal-ordered operand,
/// folding blocks right to left (innermost first). The engine is a monoid
/// action: apply_word(apply_word(nf, v), u) == apply_word(nf, concat(u, v)).
inline NormalForm apply_word(NormalForm nf, const Word& w) {
    const auto& blocks = w.blocks();
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        if (it->gen == Generator::X)
            nf = apply_x(nf, it->exp);
        else
            nf = apply_I_power(nf, it->exp);
    }
    return nf;
}

/// Ground-truth normal ordering: rewrites the word into its unique form
/// sum c(i,j) x^i I^j. The empty word gives the identity x^0 I^0.
inline NormalForm normal_order(const Word& w) {
    return apply_word(NormalForm::one(), w);
}

} // namespace ixcalc
