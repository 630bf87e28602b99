#pragma once

#include "ixcalc/integer.hpp"
#include "ixcalc/normal_form.hpp"
#include "ixcalc/word.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ixcalc {

/// Closed-form normal ordering of x^{r_n} I^{s_n} ... x^{r_1} I^{s_1} from
/// its segment exponents alone (pairs[0] = (r_1, s_1), rightmost first).
/// With S_j = r_1+...+r_j, s = s_1+...+s_n and cumulative drop indices
/// p_0 = 0 <= p_1 <= ... <= p_{n-1}, p_j <= S_j:
///
///   w = sum over chains (p_1..p_{n-1}) of (-1)^{p_{n-1}}
///       prod_{j=1}^{n-1} (S_j - p_{j-1})_{p_j - p_{j-1}}
///                        C(p_j - p_{j-1} + s_{j+1} - 1, s_{j+1} - 1)
///       x^{S_n - p_{n-1}} I^{s + p_{n-1}}.
///
/// A segment with s_{j+1} = 0 contributes through the weak-composition
/// convention C(i-1, -1) = [i = 0], which pins p_j = p_{j-1} and is exactly
/// what merging adjacent x segments requires.
inline NormalForm closed_form_from_pairs(const std::vector<XIPair>& pairs) {
    const std::size_t n = pairs.size();
    if (n == 0)
        return NormalForm::one();

    std::vector<std::uint64_t> cum_x(n + 1, 0); // cum_x[j] = S_j
    std::uint64_t total_i = 0;                  // s
    for (std::size_t j = 1; j <= n; ++j) {
        cum_x[j] = cum_x[j - 1] + pairs[j - 1].x_exp;
        total_i += pairs[j - 1].i_exp;
    }

    NormalForm out;
    if (n == 1) {
        out.add_term({cum_x[1], total_i}, 1);
        return out;
    }

    std::vector<std::uint64_t> p(n, 0); // p[0] = p_0 = 0, p[j] = p_j

    auto emit = [&]() {
        Integer coeff = 1;
        for (std::size_t j = 1; j < n; ++j) {
            const std::uint64_t step = p[j] - p[j - 1];
            coeff *= falling_factorial(cum_x[j] - p[j - 1], step);
            coeff *= weak_composition_count(step, pairs[j].i_exp); // s_{j+1}
            if (coeff == 0)
                return;
        }
        if (p[n - 1] % 2 == 1)
            coeff = -coeff;
        out.add_term({cum_x[n] - p[n - 1], total_i + p[n - 1]}, std::move(coeff));
    };

    // Nested summation from p_{n-1} outward, each p_j capped by the one
    // above it and by S_j.
    auto descend = [&](auto&& self, std::size_t j, std::uint64_t cap) -> void {
        const std::uint64_t hi = std::min(cap, cum_x[j]);
        for (std::uint64_t v = 0; v <= hi; ++v) {
            p[j] = v;
            if (j == 1)
                emit();
            else
                self(self, j - 1, v);
        }
    };
    descend(descend, n - 1, cum_x[n - 1]);
    return out;
}

/// Closed-form normal ordering of an arbitrary word; agrees term for term
/// with the rewrite engine's normal_order.
inline NormalForm word_closed_form(const Word& w) {
    return closed_form_from_pairs(w.xi_pairs());
}

} // namespace ixcalc
