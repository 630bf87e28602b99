#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace ixcalc {

/// Exact signed integer of unbounded size. Coefficients in this algebra grow
/// like (2n)!/(2^n n!), which leaves 64-bit range around n = 21.
using Integer = boost::multiprecision::cpp_int;

/// Falling factorial (a)_j = a(a-1)...(a-j+1). Empty product for j = 0,
/// zero as soon as j > a.
inline Integer falling_factorial(std::uint64_t a, std::uint64_t j) {
    if (j > a)
        return 0;
    Integer result = 1;
    for (std::uint64_t t = 0; t < j; ++t)
        result *= Integer(a - t);
    return result;
}

/// Binomial coefficient C(n, k); zero when k > n. Computed by the
/// multiplicative formula, every intermediate division is exact.
inline Integer binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Integer result = 1;
    for (std::uint64_t t = 1; t <= k; ++t) {
        result *= Integer(n - k + t);
        result /= Integer(t);
    }
    return result;
}

/// Number of weak compositions of `total` into `parts` ordered nonnegative
/// parts: C(total + parts - 1, parts - 1). With zero parts only the empty
/// sum remains, so the count is 1 for total = 0 and 0 otherwise.
inline Integer weak_composition_count(std::uint64_t total, std::uint64_t parts) {
    if (parts == 0)
        return total == 0 ? 1 : 0;
    return binomial(total + parts - 1, parts - 1);
}

} // namespace ixcalc
