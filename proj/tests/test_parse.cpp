#include "ixcalc/parse.hpp"

#include "test_helpers.hpp"

#include <catch2/catch.hpp>

#include <random>

using namespace ixcalc;

namespace {

std::size_t error_offset(const std::string& text) {
    try {
        parse_word(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    FAIL("expected a parse error for: " + text);
    return static_cast<std::size_t>(-1);
}

} // namespace

TEST_CASE("plain words parse block by block") {
    const Word w = parse_word("x^2 I x I^3");
    const std::vector<Block> want = {
        {Generator::X, 2}, {Generator::I, 1}, {Generator::X, 1}, {Generator::I, 3}};
    CHECK(w.blocks() == want);
}

TEST_CASE("group powers expand by repetition") {
    const std::vector<Block> want = {
        {Generator::X, 1}, {Generator::I, 1}, {Generator::X, 1}, {Generator::I, 1}};
    CHECK(parse_word("(xI)^2").blocks() == want);
    CHECK(parse_word("(x I)^3") == parse_word("x I x I x I"));
    CHECK(parse_word("((x I)^2 I)^2") == parse_word("x I x I^2 x I x I^2"));
    CHECK(parse_word("(x I)^0") == Word());
    CHECK(parse_word("(x^2 I)^1").str() == "x^2 I");
}

TEST_CASE("whitespace is insignificant") {
    CHECK(parse_word("  x ^ 2\tI\n x I^3 ") == parse_word("x^2 I x I^3"));
}

TEST_CASE("adjacent equal generators merge") {
    CHECK(parse_word("x^2 x^3").str() == "x^5");
    CHECK(parse_word("x^0").empty());
    CHECK(parse_word("I x^0 I").str() == "I^2");
}

TEST_CASE("syntax errors carry byte offsets") {
    SECTION("missing exponent") {
        try {
            parse_word("x^");
            FAIL("no error raised");
        } catch (const ParseError& e) {
            CHECK(e.offset() == 2);
            CHECK(e.message() == "expected integer");
            CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
        }
    }
    SECTION("other malformed inputs") {
        CHECK(error_offset("") == 0);
        CHECK(error_offset("   ") == 3);
        CHECK(error_offset("y") == 0);
        CHECK(error_offset("()") == 1);
        CHECK(error_offset("(x I") == 4);
        CHECK(error_offset("x)") == 1);
        CHECK(error_offset("x^2^3") == 3);
        CHECK(error_offset("x 5") == 2);
    }
}

TEST_CASE("exponents larger than 32 bits are rejected") {
    CHECK(parse_word("x^4294967295").blocks()[0].exp == 4294967295ull);
    try {
        parse_word("x^4294967296");
        FAIL("no error raised");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
        CHECK(e.message() == "exponent does not fit in 32 bits");
    }
}

TEST_CASE("huge group expansions are refused") {
    CHECK_THROWS_AS(parse_word("(x I x I)^4000000000"), ParseError);
}

TEST_CASE("canonical text re-parses to the same word") {
    std::mt19937 rng(707);
    for (int t = 0; t < 300; ++t) {
        const Word w = testutil::random_word(rng, 6, 4, 3);
        if (w.empty())
            continue; // "1" is not part of the input grammar
        CHECK(parse_word(w.str()) == w);
    }
}
