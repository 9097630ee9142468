#include <doctest.h>

#include "starfree/starfree.hpp"

using namespace starfree;

namespace {
std::size_t pow2(std::size_t e) { return std::size_t{1} << e; }
}  // namespace

TEST_SUITE("witnesses") {

TEST_CASE("operand complexities") {
    for (std::size_t m = 1; m <= 6; ++m) {
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto [uk, ul] = union_witnesses(m, n);
            CHECK(quotient_complexity(uk) == m);
            CHECK(quotient_complexity(ul) == n);
            const auto [ik, il] = intersection_witnesses(m, n);
            CHECK(quotient_complexity(ik) == m);
            CHECK(quotient_complexity(il) == n);
        }
    }
    for (std::size_t n = 3; n <= 8; ++n) {
        CHECK(quotient_complexity(star_witness(n, 2)) == n);
        CHECK(quotient_complexity(star_witness(n, 4)) == n);
        CHECK(quotient_complexity(left_ideal_witness(n)) == n);
    }
    for (std::size_t n = 1; n <= 8; ++n) {
        CHECK(quotient_complexity(reversal_witness(n)) == n);
        CHECK(quotient_complexity(unary_star_witness(n)) == n);
        CHECK(quotient_complexity(right_ideal_witness(n)) == n);
        CHECK(quotient_complexity(unary_word(n)) == n + 2);
        CHECK(quotient_complexity(unary_at_least(n)) == n + 1);
    }
}

TEST_CASE("boolean witnesses reach mn") {
    CHECK(boolean_op(BooleanOp::Union, union_witnesses(3, 4).first, union_witnesses(3, 4).second).complexity == 12);
    const auto [k, l] = intersection_witnesses(5, 6);
    CHECK(boolean_op(BooleanOp::Intersection, k, l).complexity == 30);
    CHECK(boolean_op(BooleanOp::SymmetricDifference, k, l).complexity == 30);
}

TEST_CASE("product table frozen from the oracle") {
    const std::size_t want[4][4] = {{4, 8, 16, 32}, {12, 24, 48, 96}, {20, 40, 80, 160}, {28, 56, 112, 224}};
    for (std::size_t m = 1; m <= 4; ++m) {
        for (std::size_t n = 3; n <= 6; ++n) {
            const auto [k, l] = product_witnesses(m, n);
            const auto r = concat(k, l);
            CHECK(r.complexity == want[m - 1][n - 3]);
            CHECK(r.complexity == (m - 1) * pow2(n) + pow2(n - 1));
        }
    }
}

TEST_CASE("n = 2 product frozen from the oracle") {
    const std::size_t want[] = {4, 7, 10, 13, 16, 19, 22};
    for (std::size_t m = 2; m <= 8; ++m) {
        const auto [k, l] = product_n2_witnesses(m);
        CHECK(concat(k, l).complexity == want[m - 2]);
    }
}

TEST_CASE("left ideal frozen from the oracle") {
    const std::size_t want[] = {4, 8, 16, 32, 64, 128};
    for (std::size_t n = 3; n <= 8; ++n) {
        const auto l = left_ideal_witness(n);
        CHECK(concat(Dfa::single_state(l.alphabet(), true), l).complexity == want[n - 3]);
    }
}

TEST_CASE("star of D_n frozen from the oracle") {
    const std::size_t want[6][3] = {{4, 5, 6}, {9, 11, 12}, {19, 23, 24}, {39, 47, 48}, {79, 95, 96}, {159, 191, 192}};
    for (std::size_t n = 3; n <= 8; ++n) {
        for (std::size_t k = 2; k <= 4; ++k) {
            CHECK(star(star_witness(n, k)).complexity == want[n - 3][k - 2]);
        }
    }
}

TEST_CASE("unary star frozen from the oracle") {
    CHECK(star(unary_star_witness(6)).complexity == 7);
    CHECK(star(unary_star_witness(7)).complexity == 13);
    CHECK(star(unary_star_witness(8)).complexity == 21);
}

TEST_CASE("reversal witness alphabet") {
    CHECK(reversal_witness(1).letter_count() == 1);
    CHECK(reversal_witness(2).letter_count() == 2);
    CHECK(reversal_witness(7).alphabet().letters() ==
          std::vector<std::string>{"a", "b", "c3", "c4", "c5", "c6"});
}

TEST_CASE("parameter checks") {
    CHECK_THROWS_AS(product_witnesses(1, 2), ConfigError);
    CHECK_THROWS_AS(star_witness(2, 2), ConfigError);
    CHECK_THROWS_AS(star_witness(4, 5), ConfigError);
    CHECK_THROWS_AS(union_witnesses(0, 3), ConfigError);
    CHECK_THROWS_AS(generate_witness({WitnessFamily::ProdK, std::nullopt, 4, std::nullopt}), ConfigError);
}

TEST_CASE("family names") {
    for (auto f : all_witness_families()) {
        CHECK(parse_witness_family(to_string(f)) == f);
    }
    CHECK(all_witness_families().size() == 24);
    CHECK(generate_witness({WitnessFamily::StarDn, std::nullopt, 5, 3}) == star_witness(5, 3));
    CHECK(generate_witness({WitnessFamily::ProdL, 2, 5, std::nullopt}) == product_witnesses(2, 5).second);
}

}
