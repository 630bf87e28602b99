#include "ixcalc/integer.hpp"

#include "test_helpers.hpp"

#include <catch2/catch.hpp>

using ixcalc::binomial;
using ixcalc::falling_factorial;
using ixcalc::Integer;
using ixcalc::weak_composition_count;

TEST_CASE("falling factorial basics") {
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(7, 0) == 1);
    CHECK(falling_factorial(3, 5) == 0);
    CHECK(falling_factorial(0, 0) == 1);
    CHECK(falling_factorial(0, 1) == 0);
    CHECK(falling_factorial(10, 10) == testutil::factorial(10));
}

TEST_CASE("binomial basics") {
    CHECK(binomial(3, 1) == 3);
    CHECK(binomial(4, 4) == 1);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(2, 5) == 0);
}

TEST_CASE("binomial agrees with the Pascal recurrence") {
    const auto pascal = testutil::pascal_triangle(30);
    for (std::size_t n = 0; n <= 30; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == pascal[n][k]);
    CHECK(binomial(6, 2) == pascal[6][2]); // 15
}

TEST_CASE("falling factorial factors as binomial times factorial") {
    for (std::uint64_t a = 0; a <= 30; ++a)
        for (std::uint64_t j = 0; j <= a; ++j)
            CHECK(falling_factorial(a, j) == binomial(a, j) * testutil::factorial(j));
}

TEST_CASE("weak composition counts") {
    // compositions of 3 into 2 parts: (0,3) (1,2) (2,1) (3,0)
    CHECK(weak_composition_count(3, 2) == 4);
    CHECK(weak_composition_count(0, 5) == 1);
    CHECK(weak_composition_count(5, 1) == 1);
    // zero parts admit only the empty sum
    CHECK(weak_composition_count(0, 0) == 1);
    CHECK(weak_composition_count(4, 0) == 0);
}

TEST_CASE("weak composition count matches brute-force enumeration") {
    // count tuples (k_1..k_parts) with sum == total, by direct recursion
    auto brute = [](auto&& self, std::uint64_t total, std::uint64_t parts) -> Integer {
        if (parts == 0)
            return total == 0 ? 1 : 0;
        Integer sum = 0;
        for (std::uint64_t first = 0; first <= total; ++first)
            sum += self(self, total - first, parts - 1);
        return sum;
    };
    for (std::uint64_t total = 0; total <= 8; ++total)
        for (std::uint64_t parts = 0; parts <= 5; ++parts)
            CHECK(weak_composition_count(total, parts) == brute(brute, total, parts));
}

TEST_CASE("coefficients beyond 64-bit range stay exact") {
    // (2n)!/(2^n n!) at n = 30 has ~40 digits
    const Integer big = testutil::factorial(60) / ((Integer(1) << 30) * testutil::factorial(30));
    CHECK(big == testutil::bessel_closed_form(30, 30));
    CHECK(big.str().size() > 20);
}
