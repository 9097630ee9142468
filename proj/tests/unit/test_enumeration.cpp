#include <doctest.h>

#include <cstdlib>

#include "starfree/starfree.hpp"

using namespace starfree;

TEST_SUITE("enumeration") {

TEST_CASE("letter pools") {
    const auto two = letter_pool(2, TransformationFilter::AperiodicOnly);
    REQUIRE(two.size() == 3);
    for (const auto& t : two) {
        CHECK_FALSE(t == Transformation({1, 0}));
    }
    CHECK(letter_pool(3, TransformationFilter::NondecreasingOnly).size() == 10);
    CHECK(letter_pool(4, TransformationFilter::NondecreasingOnly).size() == 35);
    CHECK(letter_pool(3, TransformationFilter::All).size() == 27);
    CHECK(letter_pool(1, TransformationFilter::All).size() == 1);
}

TEST_CASE("one state gives two machines") {
    EnumerationConfig cfg;
    cfg.states = 1;
    cfg.max_letters = 3;
    std::size_t finals = 0;
    CHECK(enumerate_dfas(cfg, [&](const Dfa& d) { finals += d.is_final(0) ? 1 : 0; }) == 2);
    CHECK(finals == 1);
}

TEST_CASE("visited machines are connected and in class") {
    EnumerationConfig cfg;
    cfg.states = 3;
    cfg.max_letters = 2;
    std::size_t seen = 0;
    enumerate_dfas(cfg, [&](const Dfa& d) {
        ++seen;
        CHECK(reachable_states(d).size() == 3);
        CHECK(is_aperiodic(d).aperiodic);
    });
    CHECK(seen > 0);
    CHECK(seen <= candidate_count(cfg));
}

TEST_CASE("budget is enforced before the search") {
    EnumerationConfig cfg;
    cfg.states = 4;
    cfg.max_letters = 4;
    cfg.filter = TransformationFilter::All;
    bool called = false;
    CHECK_THROWS_AS(enumerate_dfas(cfg, [&](const Dfa&) { called = true; }, 1000), ResourceError);
    CHECK_FALSE(called);
}

TEST_CASE("search budget from the environment") {
    setenv("STARFREE_BUDGET", "1234", 1);
    CHECK(search_budget_from_env() == 1234);
    setenv("STARFREE_BUDGET", "junk", 1);
    CHECK(search_budget_from_env() == kDefaultSearchBudget);
    unsetenv("STARFREE_BUDGET");
    CHECK(search_budget_from_env() == kDefaultSearchBudget);
}

TEST_CASE("small searches") {
    const auto a2 = [](std::size_t k) {
        EnumerationConfig cfg;
        cfg.states = 2;
        cfg.max_letters = k;
        return cfg;
    };
    const auto product = max_operation_complexity(Operation::Concat, a2(9), a2(9));
    CHECK(product.maximum == 4);
    REQUIRE(product.witness_k.has_value());
    const Dfa pair[] = {*product.witness_k, *product.witness_l};
    CHECK(apply(Operation::Concat, pair).complexity == 4);
    CHECK(max_operation_complexity(Operation::Reverse, a2(3)).maximum == 3);

    EnumerationConfig three;
    three.states = 3;
    for (std::size_t k = 2; k <= 4; ++k) {
        three.max_letters = k;
        CHECK(max_operation_complexity(Operation::Star, three).maximum == k + 2);
    }
    CHECK_THROWS_AS(max_operation_complexity(Operation::Union, a2(2)), ConfigError);
}

TEST_CASE("letter-set dedupe gives the same maxima on two states") {
    for (auto op : {Operation::Star, Operation::Reverse, Operation::Complement}) {
        EnumerationConfig sets;
        sets.states = 2;
        sets.max_letters = 3;
        auto tuples = sets;
        tuples.dedupe = false;
        CHECK(max_operation_complexity(op, sets).maximum == max_operation_complexity(op, tuples).maximum);
    }
    for (auto op : {Operation::Concat, Operation::Union, Operation::SymmetricDifference}) {
        EnumerationConfig sets;
        sets.states = 2;
        sets.max_letters = 3;
        auto tuples = sets;
        tuples.dedupe = false;
        CHECK(max_operation_complexity(op, sets, sets).maximum == max_operation_complexity(op, tuples, tuples).maximum);
    }
}

TEST_CASE("soundness sweep against regular ceilings" * doctest::test_suite("soundness")) {
    // every aperiodic pair with m, n <= 3; three joint letters except at m = n = 3
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t n = 1; n <= 3; ++n) {
            EnumerationConfig kc;
            kc.states = m;
            kc.max_letters = m == 3 && n == 3 ? 2 : 3;
            EnumerationConfig lc = kc;
            lc.states = n;
            std::size_t pairs = 0;
            enumerate_dfa_pairs(kc, lc, [&](const Dfa& k, const Dfa& l) {
                ++pairs;
                const Dfa both[] = {k, l};
                const auto mk = quotient_complexity(k);
                const auto nl = quotient_complexity(l);
                for (auto op : {Operation::Union, Operation::Intersection, Operation::Difference,
                                Operation::SymmetricDifference}) {
                    REQUIRE(apply(op, both).complexity <= mk * nl);
                }
                REQUIRE(apply(Operation::Concat, both).complexity <= (mk - 1) * (1u << nl) + (1u << (nl - 1)));
                REQUIRE(reverse(l).complexity <= (1u << nl));
                REQUIRE(star(l).complexity <= (1u << nl));
            });
            CHECK(pairs > 0);
        }
    }
}

}
