#include <doctest.h>

#include <set>

#include "f4r/catalog.hpp"
#include "f4r/code.hpp"
#include "f4r/text.hpp"

using namespace f4r;

TEST_CASE("catalog shape") {
    CHECK(catalog::skew_ingredients().size() == 6);
    CHECK(catalog::cyclic_ingredients().size() == 24);
    CHECK(catalog::product_entries().size() == 29);

    // dimensions match generator degrees: k = n - deg g
    for (const auto& row : catalog::skew_ingredients())
        for (const auto& gen : row.generators)
            CHECK(parse_poly<F4>(gen).degree() == row.n - row.k);
    for (const auto& row : catalog::cyclic_ingredients())
        CHECK(parse_poly<F4>(row.generator).degree() == row.n - row.k);
}

TEST_CASE("every product entry resolves to unique ingredients") {
    for (const auto& e : catalog::product_entries()) {
        const auto res = catalog::resolve_product(e);
        REQUIRE(res.has_value());
        const auto& c0 = catalog::cyclic_ingredients()[static_cast<size_t>(res->cyclic_no) - 1];
        const auto& s = catalog::skew_ingredients()[static_cast<size_t>(res->skew_no) - 1];
        CHECK(c0.no == res->cyclic_no);
        CHECK(s.no == res->skew_no);
        CHECK(c0.n + 2 * s.n == e.n);
        CHECK(c0.k + 2 * s.k == e.k);
        CHECK(c0.d == e.d);
        CHECK(s.d == e.d);
    }
}

TEST_CASE("transcription notes") {
    const auto notes = catalog::catalog_notes();
    REQUIRE(notes.size() == 1);
    CHECK(notes[0].find("table 2 row 7") != std::string::npos);
    // the lowercase term parses to the same polynomial as its normalized form
    const auto& row7 = catalog::cyclic_ingredients()[6];
    CHECK(row7.generator.find("x^3") != std::string::npos);
    std::string fixed = row7.generator;
    fixed.replace(fixed.find("x^3"), 3, "X^3");
    CHECK(parse_poly<F4>(row7.generator) == parse_poly<F4>(fixed));
}

TEST_CASE("small ingredient rows verify structurally") {
    // table 1 rows 1 and 3: generators right-divide X^n-1 and give 4^k words
    for (int no : {1, 3}) {
        const auto& row = catalog::skew_ingredients()[static_cast<size_t>(no) - 1];
        const auto g = parse_poly<F4>(row.generators[0]);
        CHECK(is_right_divisor_of_xn_minus_1(g, static_cast<size_t>(row.n), Twist::theta));
        const Code c = build_f4_skew_cyclic(g, static_cast<size_t>(row.n));
        CHECK(c.log2_size() == 2 * static_cast<size_t>(row.k));
        CHECK(min_distance(c).value == static_cast<unsigned>(row.d));
    }
    // table 2 rows 1-3
    for (int no : {1, 2, 3}) {
        const auto& row = catalog::cyclic_ingredients()[static_cast<size_t>(no) - 1];
        const auto g = parse_poly<F4>(row.generator);
        CHECK(is_right_divisor_of_xn_minus_1(g, static_cast<size_t>(row.n), Twist::none));
        const Code c = build_f4_cyclic(g, static_cast<size_t>(row.n));
        CHECK(c.log2_size() == 2 * static_cast<size_t>(row.k));
        const auto d = min_distance(c);
        CHECK(d.exact);
        CHECK(d.value == static_cast<unsigned>(row.d));
    }
}

TEST_CASE("table 1 row 2 first generator is defective as published") {
    // the printed polynomial lacks its constant term (it equals the second
    // generator minus w); a polynomial with zero constant term cannot
    // right-divide X^n - 1, and the module it generates is much larger than
    // the claimed code
    const auto& row = catalog::skew_ingredients()[1];
    REQUIRE(row.generators.size() == 2);
    const auto g1 = parse_poly<F4>(row.generators[0]);
    const auto g2 = parse_poly<F4>(row.generators[1]);
    CHECK(g1.constant_term().is_zero());
    CHECK(g1 + g2 == Poly<F4>::constant(F4::w()));
    CHECK(!is_right_divisor_of_xn_minus_1(g1, 30, Twist::theta));
    CHECK(is_right_divisor_of_xn_minus_1(g2, 30, Twist::theta));
}
