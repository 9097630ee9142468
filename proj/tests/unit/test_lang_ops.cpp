#include <doctest.h>

#include <random>

#include "starfree/starfree.hpp"
#include "test_support.hpp"

using namespace starfree;

TEST_SUITE("lang-ops") {

TEST_CASE("operation names") {
    CHECK(parse_operation("symdiff") == Operation::SymmetricDifference);
    CHECK(parse_operation("product") == Operation::Concat);
    CHECK(parse_operation("reversal") == Operation::Reverse);
    CHECK_FALSE(parse_operation("shuffle").has_value());
    CHECK(arity(Operation::Star) == 1);
    CHECK(arity(Operation::Difference) == 2);
    CHECK(combine(BooleanOp::Difference, true, false));
    CHECK_FALSE(combine(BooleanOp::SymmetricDifference, true, true));
}

TEST_CASE("every construction matches the word oracle") {
    const auto corpus = testing::aperiodic_corpus(60, 4, 2, 99);
    const Operation binary[] = {Operation::Union, Operation::Intersection, Operation::Difference,
                                Operation::SymmetricDifference, Operation::Concat};
    const Operation unary[] = {Operation::Complement, Operation::Star, Operation::Reverse};
    for (const auto& [k, l] : corpus) {
        const Dfa pair[] = {k, l};
        for (auto op : binary) {
            CHECK(testing::oracle_discrepancies(op, pair, apply(op, pair).result, 6) == 0);
        }
        for (auto op : unary) {
            const std::span<const Dfa> one(pair, 1);
            CHECK(testing::oracle_discrepancies(op, one, apply(op, one).result, 6) == 0);
        }
    }
}

TEST_CASE("alphabets must agree") {
    const auto k = star_witness(3, 2);
    const auto l = star_witness(3, 3);
    CHECK_THROWS_AS(concat(k, l), AlphabetMismatch);
    CHECK_THROWS_AS(boolean_op(BooleanOp::Union, k, l), AlphabetMismatch);
    const Dfa one[] = {k};
    CHECK_THROWS(apply(Operation::Union, one));
}

TEST_CASE("results are minimal") {
    const auto [k, l] = product_witnesses(2, 4);
    const auto r = concat(k, l);
    CHECK(r.result.state_count() == r.complexity);
    CHECK(minimize(r.result) == r.result);
    CHECK(r.construction_states >= r.complexity);
}

TEST_CASE("small stars") {
    const auto sigma = Alphabet::first_letters(1);
    CHECK(star(Dfa::single_state(sigma, false)).complexity == 2);
    CHECK(star(Dfa::single_state(sigma, true)).complexity == 1);
    CHECK(star(star_small_witness(2)).complexity == 3);
}

TEST_CASE("reversal of the reversal witness") {
    // frozen with the independent oracle: 7, 15, 31, 63, 127
    const std::size_t want[] = {7, 15, 31, 63, 127};
    for (std::size_t n = 3; n <= 7; ++n) {
        CHECK(reverse(reversal_witness(n)).complexity == want[n - 3]);
    }
}

TEST_CASE("complement keeps complexity") {
    std::mt19937 rng(17);
    for (int i = 0; i < 50; ++i) {
        const auto d = testing::random_dfa(rng, 1 + i % 6, 2);
        CHECK(complement(d).complexity == quotient_complexity(d));
    }
}

}
