#include <doctest.h>

#include <random>

#include "starfree/starfree.hpp"
#include "test_support.hpp"

using namespace starfree;

TEST_SUITE("aperiodicity") {

TEST_CASE("transformations") {
    const Transformation t({1, 2, 2});
    CHECK(t.is_nondecreasing());
    CHECK_FALSE(t.is_permutation());
    CHECK(t.then(t) == Transformation({2, 2, 2}));
    CHECK(Transformation::identity(3).is_identity());
    CHECK(all_transformations(3).size() == 27);
    CHECK(is_aperiodic_transformation(t));
    CHECK_FALSE(is_aperiodic_transformation(Transformation({1, 0, 2})));
    const auto pc = power_cycle(Transformation({1, 2, 1}));
    CHECK(pc.index == 1);
    CHECK(pc.period == 2);
}

TEST_CASE("D_3(a,b) monoid") {
    const auto m = transition_monoid(star_witness(3, 2));
    CHECK(m.size() == 8);
    CHECK(m.elements.front().is_identity());
    CHECK(m.witness_words.front().empty());
    for (std::size_t i = 0; i < m.size(); ++i) {
        CHECK(m.find(m.elements[i]) == i);
    }
}

TEST_CASE("aperiodic witnesses") {
    CHECK(is_aperiodic(star_witness(6, 4)).aperiodic);
    CHECK(is_aperiodic(reversal_witness(6)).aperiodic);
    const auto [k, l] = product_witnesses(3, 5);
    CHECK(is_aperiodic(k).aperiodic);
    CHECK(is_aperiodic(l).aperiodic);
    CHECK(is_nondecreasing(reversal_witness(6)));
}

TEST_CASE("a cyclic letter is caught with a certificate") {
    // (aa)*: a swaps the two states
    const State finals[] = {0};
    const auto d = Dfa::from_rows(Alphabet::first_letters(1), {{1}, {0}}, 0, finals);
    const auto report = is_aperiodic(d);
    CHECK_FALSE(report.aperiodic);
    REQUIRE(report.certificate.has_value());
    CHECK(report.certificate->word.length() == 1);
    CHECK(report.certificate->subset == StateSet{0, 1});
}

TEST_CASE("cycle hidden in a product of aperiodic letters") {
    // a = (1 2 3 -> 1 1 2), b = (3 1 3); ab swaps states 1 and 3
    const State finals[] = {0};
    const auto d = Dfa::from_rows(Alphabet::first_letters(2), {{0, 2}, {0, 0}, {1, 2}}, 0, finals);
    CHECK(is_aperiodic_transformation(letter_transformation(d, 0)));
    CHECK(is_aperiodic_transformation(letter_transformation(d, 1)));
    const auto report = is_aperiodic(d);
    CHECK_FALSE(report.aperiodic);
    REQUIRE(report.certificate.has_value());
    CHECK(report.certificate->word == Word::parse(d.alphabet(), "ab"));
    CHECK(report.certificate->subset == StateSet{0, 2});
}

TEST_CASE("certificate subsets are permuted non-trivially") {
    std::mt19937 rng(3);
    int found = 0;
    for (int i = 0; i < 300; ++i) {
        const auto d = testing::random_dfa(rng, 2 + i % 4, 1 + i % 2);
        const auto report = is_aperiodic(d);
        const auto monoid = transition_monoid(d);
        bool expect = true;
        for (const auto& t : monoid.elements) {
            // t^k = t^(k+1) for large k
            auto p = t;
            for (std::size_t j = 0; j < d.state_count(); ++j) {
                p = p.then(t);
            }
            expect = expect && p.then(t) == p;
        }
        CHECK(report.aperiodic == expect);
        CHECK(report.monoid_size == monoid.size());
        if (report.certificate) {
            ++found;
            const auto t = transformation_of_word(d, report.certificate->word);
            StateSet image;
            for (State q : report.certificate->subset.members()) {
                image.insert(t(q));
            }
            CHECK(image == report.certificate->subset);
            bool moves = false;
            for (State q : report.certificate->subset.members()) {
                moves = moves || t(q) != q;
            }
            CHECK(moves);
        }
    }
    CHECK(found > 0);
}

TEST_CASE("monoid budget") {
    CHECK_THROWS_AS(transition_monoid(star_witness(6, 4), 10), ResourceError);
}

}
