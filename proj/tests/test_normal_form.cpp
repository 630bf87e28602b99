#include "ixcalc/normal_form.hpp"

#include "test_helpers.hpp"

#include <catch2/catch.hpp>

#include <random>
#include <vector>

using namespace ixcalc;

TEST_CASE("zero coefficients are never stored") {
    NormalForm nf;
    nf.add_term({1, 1}, 0);
    CHECK(nf.is_zero());
    nf.add_term({2, 2}, 1);
    nf.add_term({2, 2}, -1);
    CHECK(nf.is_zero());
}

TEST_CASE("scaling by zero annihilates") {
    CHECK(nf_scale(NormalForm::monomial({1, 1}), 0).is_zero());
}

TEST_CASE("addition with cancellation prunes") {
    const auto a = NormalForm::monomial({2, 2});
    const auto b = NormalForm::monomial({2, 2}, -1);
    CHECK(nf_add(a, b).is_zero());
}

TEST_CASE("addition over disjoint keys keeps both terms") {
    const auto sum = nf_add(NormalForm::monomial({2, 2}), NormalForm::monomial({1, 3}, -1));
    REQUIRE(sum.size() == 2);
    CHECK(sum.coeff({2, 2}) == 1);
    CHECK(sum.coeff({1, 3}) == -1);
}

TEST_CASE("iteration is ordered by I power then x power") {
    NormalForm nf;
    nf.add_term({0, 5}, 1);
    nf.add_term({3, 1}, 1);
    nf.add_term({0, 1}, 1);
    std::vector<Monomial> keys;
    for (const auto& [m, c] : nf.terms())
        keys.push_back(m);
    REQUIRE(keys.size() == 3);
    CHECK(keys[0] == Monomial{0, 1});
    CHECK(keys[1] == Monomial{3, 1});
    CHECK(keys[2] == Monomial{0, 5});
}

TEST_CASE("addition is commutative and associative") {
    std::mt19937 rng(303);
    for (int t = 0; t < 300; ++t) {
        const NormalForm a = testutil::random_normal_form(rng, 6);
        const NormalForm b = testutil::random_normal_form(rng, 6);
        const NormalForm c = testutil::random_normal_form(rng, 6);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("scaling distributes over addition") {
    std::mt19937 rng(304);
    std::uniform_int_distribution<int> scale(-4, 4);
    for (int t = 0; t < 300; ++t) {
        const NormalForm a = testutil::random_normal_form(rng, 6);
        const NormalForm b = testutil::random_normal_form(rng, 6);
        const Integer c = scale(rng);
        CHECK(nf_scale(a + b, c) == nf_scale(a, c) + nf_scale(b, c));
    }
}

TEST_CASE("anti-diagonal predicate") {
    NormalForm nf;
    nf.add_term({2, 2}, 1);
    nf.add_term({1, 3}, -1);
    CHECK(nf.on_anti_diagonal(2, 2));
    CHECK_FALSE(nf.on_anti_diagonal(3, 2));
    nf.add_term({4, 4}, 1);
    CHECK_FALSE(nf.on_anti_diagonal(2, 2));
}
