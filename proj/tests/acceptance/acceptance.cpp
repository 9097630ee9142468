// Acceptance suite. `acceptance [N ...]` runs the listed criteria (all by
// default) and prints one "criterion N: PASS|FAIL" line per criterion.
// Exit status is nonzero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "starfree/starfree.hpp"
#include "test_support.hpp"

namespace sf = starfree;
using sf::Operation;

namespace {

// Collects mismatches; a criterion passes when there are none and it ran
// within its time limit.
struct Check {
    std::size_t checked = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failures.size() < 1000) {
            failures.push_back(what);
        }
    }
    void expect_eq(std::size_t got, std::size_t want, const std::string& what) {
        expect(got == want, what + ": got " + std::to_string(got) + ", want " + std::to_string(want));
    }
};

std::size_t kappa(Operation op, const sf::Dfa& k, const sf::Dfa& l) {
    const sf::Dfa operands[] = {k, l};
    return sf::apply(op, operands).complexity;
}

std::size_t pow2(std::size_t e) { return std::size_t{1} << e; }

// An exhaustive search must see every candidate; the criteria pin their own ceiling.
constexpr std::size_t kSearchBudget = 10'000'000;

std::size_t search_max(Operation op, std::size_t states, std::size_t letters, sf::TransformationFilter filter,
                       bool pair = false) {
    sf::EnumerationConfig cfg;
    cfg.states = states;
    cfg.max_letters = letters;
    cfg.filter = filter;
    std::optional<sf::EnumerationConfig> second;
    if (pair) {
        second = cfg;
    }
    return sf::max_operation_complexity(op, cfg, second, kSearchBudget).maximum;
}

void criterion1(Check& c) {
    using sf::BooleanOp;
    for (std::size_t m = 2; m <= 7; ++m) {
        for (std::size_t n = 2; n <= 7; ++n) {
            const auto tag = " m=" + std::to_string(m) + " n=" + std::to_string(n);
            const auto [uk, ul] = sf::union_witnesses(m, n);
            const auto [ik, il] = sf::intersection_witnesses(m, n);
            c.expect_eq(sf::boolean_op(BooleanOp::Union, uk, ul).complexity, m * n, "union" + tag);
            c.expect_eq(sf::boolean_op(BooleanOp::Intersection, ik, il).complexity, m * n, "intersection" + tag);
            c.expect_eq(sf::boolean_op(BooleanOp::SymmetricDifference, ik, il).complexity, m * n, "symdiff" + tag);
            // complement(K) \ L is the complement of K u L
            c.expect_eq(sf::boolean_op(BooleanOp::Difference, uk.complemented(), ul).complexity, m * n,
                        "difference" + tag);
            c.expect_eq(sf::quotient_complexity(uk.complemented()), m, "complement keeps kappa" + tag);
        }
    }
}

void criterion2(Check& c) {
    for (std::size_t m = 1; m <= 4; ++m) {
        for (std::size_t n = 3; n <= 6; ++n) {
            const auto tag = " m=" + std::to_string(m) + " n=" + std::to_string(n);
            const auto [k, l] = sf::product_witnesses(m, n);
            c.expect_eq(sf::quotient_complexity(k), m, "kappa(K)" + tag);
            c.expect_eq(sf::quotient_complexity(l), n, "kappa(L)" + tag);
            const auto want = (m - 1) * pow2(n) + pow2(n - 1);
            const auto result = sf::concat(k, l);
            c.expect_eq(result.complexity, want, "kappa(KL)" + tag);
            c.expect_eq(result.construction_states, want, "reachable subsets" + tag);
            c.expect(sf::is_aperiodic(k).aperiodic && sf::is_aperiodic(l).aperiodic, "operands aperiodic" + tag);
        }
    }
}

void criterion3(Check& c) {
    for (std::size_t n = 3; n <= 8; ++n) {
        const auto l = sf::left_ideal_witness(n);
        c.expect_eq(sf::quotient_complexity(l), n, "kappa(L) n=" + std::to_string(n));
        c.expect_eq(sf::concat(sf::Dfa::single_state(l.alphabet(), true), l).complexity, pow2(n - 1),
                    "left ideal n=" + std::to_string(n));
    }
    for (std::size_t m = 1; m <= 8; ++m) {
        const auto k = sf::right_ideal_witness(m);
        c.expect_eq(sf::quotient_complexity(k), m, "kappa(K) m=" + std::to_string(m));
        c.expect_eq(sf::concat(k, sf::Dfa::single_state(k.alphabet(), true)).complexity, m,
                    "right ideal m=" + std::to_string(m));
    }
}

void criterion4(Check& c) {
    for (std::size_t m = 2; m <= 8; ++m) {
        const auto [k, l] = sf::product_n2_witnesses(m);
        c.expect_eq(sf::quotient_complexity(l), 2, "kappa(L) m=" + std::to_string(m));
        c.expect_eq(sf::concat(k, l).complexity, 3 * m - 2, "3m-2 m=" + std::to_string(m));
    }
    // nine joint letters = every pair of the three aperiodic 2-state maps
    const auto best = search_max(Operation::Concat, 2, 9, sf::TransformationFilter::AperiodicOnly, true);
    std::cout << "  product search m=n=2: max " << best << '\n';
    c.expect_eq(best, 4, "aperiodic 2-state product maximum");
    c.expect(best < 5, "3m-1 = 5 reached at m=2");
}

void criterion5(Check& c) {
    for (std::size_t n = 3; n <= 8; ++n) {
        const auto tag = " n=" + std::to_string(n);
        c.expect_eq(sf::star(sf::star_witness(n, 2)).complexity, pow2(n - 1) + pow2(n - 3) - 1, "D_n(a,b)" + tag);
        c.expect_eq(sf::star(sf::star_witness(n, 3)).complexity, pow2(n - 1) + pow2(n - 2) - 1, "D_n(a,b,c)" + tag);
        c.expect_eq(sf::star(sf::star_witness(n, 4)).complexity, pow2(n - 1) + pow2(n - 2), "D_n(a,b,c,d)" + tag);
    }
    c.expect_eq(sf::quotient_complexity(sf::star_small_witness(1)), 1, "kappa(empty)");
    c.expect_eq(sf::star(sf::star_small_witness(1)).complexity, 2, "kappa(empty*)");
    c.expect_eq(sf::quotient_complexity(sf::star_small_witness(2)), 2, "kappa(b*aS*)");
    c.expect_eq(sf::star(sf::star_small_witness(2)).complexity, 3, "kappa((b*aS*)*)");
    const std::size_t aperiodic_n3[] = {4, 5, 6};
    const std::size_t nondecreasing_n4[] = {9, 11, 12};
    for (std::size_t k = 2; k <= 4; ++k) {
        const auto a = search_max(Operation::Star, 3, k, sf::TransformationFilter::AperiodicOnly);
        const auto d = search_max(Operation::Star, 4, k, sf::TransformationFilter::NondecreasingOnly);
        std::cout << "  star search " << k << " letters: aperiodic n=3 max " << a << ", nondecreasing n=4 max " << d
                  << '\n';
        c.expect_eq(a, aperiodic_n3[k - 2], "aperiodic n=3 star search, letters=" + std::to_string(k));
        c.expect_eq(d, nondecreasing_n4[k - 2], "nondecreasing n=4 star search, letters=" + std::to_string(k));
    }
}

void criterion6(Check& c) {
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto tag = " n=" + std::to_string(n);
        const auto d = sf::reversal_witness(n);
        c.expect_eq(sf::quotient_complexity(d), n, "kappa(L)" + tag);
        c.expect_eq(d.letter_count(), n <= 2 ? n : n - 1, "alphabet size" + tag);
        c.expect(sf::is_aperiodic(d).aperiodic, "witness aperiodic" + tag);
        c.expect_eq(sf::reverse(d).complexity, pow2(n) - 1, "kappa(L^R)" + tag);
    }
    const auto best = search_max(Operation::Reverse, 2, 3, sf::TransformationFilter::AperiodicOnly);
    std::cout << "  reversal search n=2: max " << best << '\n';
    c.expect_eq(best, 3, "aperiodic 2-state reversal maximum");
}

void criterion7(Check& c) {
    using sf::BooleanOp;
    const BooleanOp ops[] = {BooleanOp::Union, BooleanOp::Intersection, BooleanOp::SymmetricDifference,
                             BooleanOp::Difference};
    for (auto op : ops) {
        std::size_t missed = 0;
        for (std::size_t m = 1; m <= 8; ++m) {
            for (std::size_t n = 1; n <= 8; ++n) {
                const auto [k, l] = sf::unary_boolean_witnesses(op, m, n);
                const auto got = sf::boolean_op(op, k, l).complexity;
                if (got != std::max(m, n)) {
                    ++missed;
                }
                c.expect_eq(got, std::max(m, n),
                            std::string(sf::to_string(op)) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
            }
        }
        if (missed > 0) {
            std::cout << "  " << sf::to_string(op) << ": " << missed << " of 64 cells miss max(m,n)\n";
        }
    }
    // Exhaustive evidence for the symmetric difference cells with m = n.
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto machines = starfree::testing::minimal_unary_aperiodic(n);
        std::size_t best = 0;
        for (const auto& k : machines) {
            for (const auto& l : machines) {
                best = std::max(best, kappa(Operation::SymmetricDifference, k, l));
            }
        }
        if (best != n) {
            std::cout << "  exhaustive unary symdiff m=n=" << n << ": max " << best << " over " << machines.size()
                      << "^2 pairs\n";
        }
    }
    for (std::size_t m = 1; m <= 8; ++m) {
        for (std::size_t n = 1; n <= 8; ++n) {
            const auto [k, l] = sf::unary_product_witnesses(m, n);
            c.expect_eq(sf::concat(k, l).complexity, m + n - 1,
                        "product m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
    }
    const std::map<std::size_t, std::size_t> star_values{{1, 2}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {7, 13}, {8, 21}};
    for (const auto& [n, want] : star_values) {
        const auto d = sf::unary_star_witness(n);
        c.expect_eq(sf::quotient_complexity(d), n, "kappa(L) n=" + std::to_string(n));
        c.expect_eq(sf::star(d).complexity, want, "star n=" + std::to_string(n));
        if (n >= 7) {
            c.expect_eq(want, n * n - 7 * n + 13, "n^2-7n+13 n=" + std::to_string(n));
        }
    }
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    for (int i = 0; i < 20; ++i) {
        auto d = starfree::testing::random_dfa(rng, size(rng), 1);
        while (!sf::is_aperiodic(d).aperiodic) {
            d = starfree::testing::random_dfa(rng, d.state_count(), 1);
        }
        c.expect_eq(sf::reverse(d).complexity, sf::quotient_complexity(d), "unary reversal sample " + std::to_string(i));
    }
}

void criterion8(Check& c) {
    const auto corpus = starfree::testing::aperiodic_corpus(200, 5, 3, 2024);
    const Operation binary[] = {Operation::Union, Operation::Intersection, Operation::Difference,
                                Operation::SymmetricDifference, Operation::Concat};
    const Operation unary[] = {Operation::Complement, Operation::Star, Operation::Reverse};
    std::size_t discrepancies = 0;
    std::size_t closure_failures = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& [k, l] = corpus[i];
        const sf::Dfa pair[] = {k, l};
        for (auto op : binary) {
            const auto result = sf::apply(op, pair).result;
            const auto bad = starfree::testing::oracle_discrepancies(op, pair, result, 6);
            discrepancies += bad;
            c.expect(bad == 0, std::string(sf::to_string(op)) + " disagrees with the oracle on sample " +
                                   std::to_string(i));
            const bool closed = sf::is_aperiodic(result).aperiodic;
            closure_failures += closed ? 0 : 1;
            c.expect(closed, std::string(sf::to_string(op)) + " output not aperiodic, sample " + std::to_string(i));
        }
        for (auto op : unary) {
            const auto result = sf::apply(op, std::span<const sf::Dfa>(pair, 1)).result;
            const auto bad = starfree::testing::oracle_discrepancies(op, std::span<const sf::Dfa>(pair, 1), result, 6);
            discrepancies += bad;
            c.expect(bad == 0, std::string(sf::to_string(op)) + " disagrees with the oracle on sample " +
                                   std::to_string(i));
            if (op != Operation::Star) {
                const bool closed = sf::is_aperiodic(result).aperiodic;
                closure_failures += closed ? 0 : 1;
                c.expect(closed, std::string(sf::to_string(op)) + " output not aperiodic, sample " + std::to_string(i));
            }
        }
    }
    std::cout << "  oracle: " << discrepancies << " discrepancies, closure: " << closure_failures << " failures\n";

    std::size_t nondecreasing = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        sf::EnumerationConfig cfg;
        cfg.states = n;
        cfg.max_letters = 4;
        cfg.filter = sf::TransformationFilter::NondecreasingOnly;
        sf::enumerate_dfas(
            cfg,
            [&](const sf::Dfa& d) {
                ++nondecreasing;
                c.expect(sf::is_nondecreasing(d) && sf::is_aperiodic(d).aperiodic,
                         "nondecreasing machine not aperiodic: " + sf::to_json(d));
            },
            kSearchBudget);
    }
    for (std::size_t n = 1; n <= 3; ++n) {
        sf::EnumerationConfig cfg;
        cfg.states = n;
        cfg.max_letters = 2;
        cfg.filter = sf::TransformationFilter::All;
        sf::enumerate_dfas(
            cfg,
            [&](const sf::Dfa& d) {
                if (sf::is_nondecreasing(d)) {
                    ++nondecreasing;
                    c.expect(sf::is_aperiodic(d).aperiodic, "nondecreasing machine not aperiodic: " + sf::to_json(d));
                }
            },
            kSearchBudget);
    }
    std::cout << "  nondecreasing => aperiodic over " << nondecreasing << " machines\n";
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "boolean bounds mn", 5, criterion1},
        {2, "product bound (m-1)2^n+2^(n-1)", 10, criterion2},
        {3, "left and right ideals", 2, criterion3},
        {4, "product with n=2", 60, criterion4},
        {5, "star bounds and Table 1 searches", 600, criterion5},
        {6, "reversal 2^n-1", 300, criterion6},
        {7, "unary bounds", 5, criterion7},
        {8, "oracle, closure and nondecreasing properties", 600, criterion8},
    };
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.push_back(std::atoi(argv[i]));
    }
    int failed = 0;
    for (const auto& crit : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), crit.id) == selected.end()) {
            continue;
        }
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            crit.run(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > crit.limit_seconds) {
            check.failures.push_back("took " + std::to_string(seconds) + " s, limit " +
                                     std::to_string(crit.limit_seconds) + " s");
        }
        const bool pass = check.failures.empty();
        for (std::size_t i = 0; i < check.failures.size() && i < 12; ++i) {
            std::cout << "  " << check.failures[i] << '\n';
        }
        if (check.failures.size() > 12) {
            std::cout << "  ... " << check.failures.size() - 12 << " more\n";
        }
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", seconds, crit.limit_seconds);
        std::cout << "criterion " << crit.id << ": " << (pass ? "PASS" : "FAIL") << "  " << crit.title << " ("
                  << check.checked << " checks, " << check.failures.size() << " failed, " << timing << ")"
                  << std::endl;
        failed += pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
