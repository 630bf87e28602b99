#include "ixcalc/render.hpp"

#include "ixcalc/parse.hpp"
#include "ixcalc/rewrite.hpp"

#include "test_helpers.hpp"

#include <catch2/catch.hpp>

#include <json.hpp>

#include <random>

using namespace ixcalc;

TEST_CASE("text rendering") {
    CHECK(render_text(normal_order(parse_word("x I x I"))) == "x^2 I^2 - x I^3");
    CHECK(render_text(NormalForm()) == "0");
    CHECK(render_text(NormalForm::one()) == "1");
    CHECK(render_text(NormalForm::monomial({0, 0}, -3)) == "-3");
    CHECK(render_text(normal_order(parse_word("I^2 x^5 I^3"))) ==
          "x^5 I^5 - 10 x^4 I^6 + 60 x^3 I^7 - 240 x^2 I^8 + 600 x I^9 - 720 I^10");
}

TEST_CASE("latex rendering") {
    CHECK(render_latex(normal_order(parse_word("x I x I"))) ==
          "x^{2}\\mathrm{I}^{2} - x\\mathrm{I}^{3}");
    CHECK(render_latex(normal_order(parse_word("I^2 x^5 I^3"))) ==
          "x^{5}\\mathrm{I}^{5} - 10x^{4}\\mathrm{I}^{6} + 60x^{3}\\mathrm{I}^{7} - "
          "240x^{2}\\mathrm{I}^{8} + 600x\\mathrm{I}^{9} - 720\\mathrm{I}^{10}");
    CHECK(render_latex(NormalForm()) == "0");
    CHECK(render_latex(NormalForm::one()) == "1");
}

TEST_CASE("json document fields") {
    const Word w = parse_word("x I x I");
    const auto doc = normal_form_json(w, normal_order(w));
    CHECK(doc["word"] == "x I x I");
    CHECK(doc["total_x"] == 2);
    CHECK(doc["total_I"] == 2);
    REQUIRE(doc["terms"].size() == 2);
    CHECK(doc["terms"][0]["k"] == 0);
    CHECK(doc["terms"][0]["x"] == 2);
    CHECK(doc["terms"][0]["I"] == 2);
    CHECK(doc["terms"][0]["coeff"] == "1");
    CHECK(doc["terms"][1]["k"] == 1);
    CHECK(doc["terms"][1]["coeff"] == "-1");
}

TEST_CASE("json output round-trips byte-for-byte") {
    std::mt19937 rng(808);
    for (int t = 0; t < 100; ++t) {
        const Word w = testutil::random_word(rng, 5, 4, 3);
        const std::string emitted = render_json(w, normal_order(w));
        const auto parsed = nlohmann::ordered_json::parse(emitted);
        CHECK(parsed.dump(2) + "\n" == emitted);
    }
}

TEST_CASE("csv rendering") {
    const Word w = parse_word("x I x I");
    CHECK(render_csv(w, normal_order(w)) == "k,x,I,coeff\n0,2,2,1\n1,1,3,-1\n");
    CHECK(render_csv(Word(), NormalForm::one()) == "k,x,I,coeff\n0,0,0,1\n");
}

TEST_CASE("triangle renderings") {
    const TriangleRows rows = {{1}, {1, 1}, {1, 3, 3}};
    CHECK(render_triangle_text(rows) == "1\n1 1\n1 3 3\n");
    CHECK(render_triangle_csv(rows) == "1\n1,1\n1,3,3\n");
    CHECK(render_triangle_latex(rows) == "1 \\\\\n1 & 1 \\\\\n1 & 3 & 3 \\\\\n");
    const auto arr = triangle_rows_json(rows);
    REQUIRE(arr.size() == 3);
    CHECK(arr[2][1] == "3");
}
