#include "starfree/witnesses.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>

#include "starfree/automata.hpp"
#include "starfree/errors.hpp"

namespace starfree {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw ConfigError(message);
    }
}

// Builds an n-state automaton from step(q, a) over the given alphabet.
Dfa tabulate(Alphabet alphabet, std::size_t n, const std::function<State(State, Letter)>& step, std::vector<State> finals,
             State initial = 0) {
    std::vector<State> delta(n * alphabet.size());
    for (State q = 0; q < n; ++q) {
        for (Letter a = 0; a < alphabet.size(); ++a) {
            delta[q * alphabet.size() + a] = step(q, a);
        }
    }
    return Dfa(std::move(alphabet), n, std::move(delta), initial, finals);
}

State up(State q, std::size_t n) { return q + 1 < n ? q + 1 : q; }
State down(State q) { return q > 0 ? q - 1 : 0; }

// Counts occurrences of `letter` exactly up to `target`, then falls into a dead state.
Dfa exact_count(Letter letter, std::size_t target) {
    const std::size_t n = target + 2;
    return tabulate(Alphabet::first_letters(2), n, [&](State q, Letter a) { return a == letter ? up(q, n) : q; },
                    {static_cast<State>(target)});
}

Dfa at_least_count(Letter letter, std::size_t threshold) {
    const std::size_t n = threshold + 1;
    return tabulate(Alphabet::first_letters(2), n, [&](State q, Letter a) { return a == letter ? up(q, n) : q; },
                    {static_cast<State>(threshold)});
}

Dfa product_k(std::size_t m) {
    const State last = static_cast<State>(m - 1);
    return tabulate(Alphabet::first_letters(4), m,
                    [&](State q, Letter a) -> State {
                        switch (a) {
                            case 0: return up(q, m);
                            case 1: return down(q);
                            case 2: return q;
                            default: return last;
                        }
                    },
                    {last});
}

Dfa product_l(std::size_t n) {
    const State last = static_cast<State>(n - 1);
    return tabulate(Alphabet::first_letters(4), n,
                    [&](State q, Letter a) -> State {
                        switch (a) {
                            case 0: return (q == 0 || q == last) ? q : q + 1;
                            case 1: return q;
                            case 2: return up(q, n);
                            default: return down(q);
                        }
                    },
                    {static_cast<State>(n - 2)});
}

}  // namespace

std::pair<Dfa, Dfa> union_witnesses(std::size_t m, std::size_t n) {
    require(m >= 1 && n >= 1, "union witnesses need m, n >= 1");
    auto empty = [] { return Dfa::single_state(Alphabet::first_letters(2), false); };
    return {m == 1 ? empty() : exact_count(0, m - 2), n == 1 ? empty() : exact_count(1, n - 2)};
}

std::pair<Dfa, Dfa> intersection_witnesses(std::size_t m, std::size_t n) {
    require(m >= 1 && n >= 1, "intersection witnesses need m, n >= 1");
    return {at_least_count(0, m - 1), at_least_count(1, n - 1)};
}

std::pair<Dfa, Dfa> product_witnesses(std::size_t m, std::size_t n) {
    require(m >= 1, "product witnesses need m >= 1");
    require(n >= 3, "product witnesses need n >= 3");
    return {product_k(m), product_l(n)};
}

Dfa left_ideal_witness(std::size_t n) {
    require(n >= 3, "left ideal witness needs n >= 3");
    const std::array<Letter, 3> keep{0, 2, 3};
    return restrict_letters(product_l(n), keep);
}

Dfa right_ideal_witness(std::size_t m) {
    require(m >= 1, "right ideal witness needs m >= 1");
    return unary_at_least(m - 1);
}

std::pair<Dfa, Dfa> product_n2_witnesses(std::size_t m) {
    require(m >= 2, "n = 2 product witnesses need m >= 2");
    const std::array<Letter, 3> keep{0, 1, 2};
    Dfa k = restrict_letters(product_k(m), keep);
    Dfa l = tabulate(Alphabet::first_letters(3), 2,
                     [](State q, Letter a) -> State {
                         switch (a) {
                             case 0: return q;
                             case 1: return 0;
                             default: return 1;
                         }
                     },
                     {0});
    return {std::move(k), std::move(l)};
}

Dfa star_witness(std::size_t n, std::size_t letters) {
    require(n >= 3, "star witness D_n needs n >= 3");
    require(letters >= 2 && letters <= 4, "star witness D_n takes 2, 3 or 4 letters");
    const State last = static_cast<State>(n - 1);
    Dfa full = tabulate(Alphabet::first_letters(4), n,
                        [&](State q, Letter a) -> State {
                            switch (a) {
                                case 0: return up(q, n);
                                case 1: return down(q);
                                case 2: return (q == 0 || q == last) ? q : q - 1;
                                default: return last;
                            }
                        },
                        {static_cast<State>(n - 2)});
    if (letters == 4) {
        return full;
    }
    std::vector<Letter> keep(letters);
    for (std::size_t i = 0; i < letters; ++i) {
        keep[i] = static_cast<Letter>(i);
    }
    return restrict_letters(full, keep);
}

Dfa star_small_witness(std::size_t n) {
    require(n == 1 || n == 2, "small star witness exists for n = 1 or 2 only");
    if (n == 1) {
        return Dfa::single_state(Alphabet::first_letters(1), false);
    }
    // b*aΣ*
    return Dfa::from_rows(Alphabet::first_letters(2), {{1, 0}, {1, 1}}, 0, std::vector<State>{1});
}

Dfa reversal_witness(std::size_t n) {
    require(n >= 1, "reversal witness needs n >= 1");
    if (n == 1) {
        return Dfa::single_state(Alphabet::first_letters(1), true);
    }
    if (n == 2) {
        // Σ*a
        return Dfa::from_rows(Alphabet::first_letters(2), {{1, 0}, {1, 0}}, 0, std::vector<State>{1});
    }
    std::vector<std::string> names{"a", "b"};
    for (std::size_t j = 3; j + 1 <= n; ++j) {
        names.push_back("c" + std::to_string(j));
    }
    std::vector<State> even;
    for (State q = 1; q < n; q += 2) {
        even.push_back(q);  // printed states 2, 4, ...
    }
    return tabulate(Alphabet(std::move(names)), n,
                    [&](State q, Letter a) -> State {
                        if (a == 0) return up(q, n);
                        if (a == 1) return down(q);
                        // letter c_j (printed j = a + 1) moves printed state j to j - 1
                        const State j = a;  // 0-based index of printed state a + 1
                        return q == j ? q - 1 : q;
                    },
                    even);
}

Dfa unary_word(std::size_t k) {
    const std::size_t n = k + 2;
    return tabulate(Alphabet::first_letters(1), n, [&](State q, Letter) { return up(q, n); }, {static_cast<State>(k)});
}

Dfa unary_at_least(std::size_t k) {
    const std::size_t n = k + 1;
    return tabulate(Alphabet::first_letters(1), n, [&](State q, Letter) { return up(q, n); }, {static_cast<State>(k)});
}

std::pair<Dfa, Dfa> unary_boolean_witnesses(BooleanOp op, std::size_t m, std::size_t n) {
    require(m >= 1 && n >= 1, "unary boolean witnesses need m, n >= 1");
    auto finite = [](std::size_t c) { return c == 1 ? Dfa::single_state(Alphabet::first_letters(1), false) : unary_word(c - 2); };
    switch (op) {
        case BooleanOp::Union:
        case BooleanOp::SymmetricDifference: return {finite(m), finite(n)};
        case BooleanOp::Intersection: return {unary_at_least(m - 1), unary_at_least(n - 1)};
        case BooleanOp::Difference: return {unary_at_least(m - 1), unary_at_least(n - 1).complemented()};
    }
    throw ConfigError("unknown boolean operation");
}

std::pair<Dfa, Dfa> unary_product_witnesses(std::size_t m, std::size_t n) {
    require(m >= 1 && n >= 1, "unary product witnesses need m, n >= 1");
    return {unary_at_least(m - 1), unary_at_least(n - 1)};
}

Dfa unary_star_witness(std::size_t n) {
    require(n >= 1, "unary star witness needs n >= 1");
    if (n == 1) {
        return Dfa::single_state(Alphabet::first_letters(1), false);
    }
    if (n == 2) {
        return unary_word(0);
    }
    if (n <= 5) {
        return unary_at_least(n - 1);
    }
    // {a^(n-3), a^(n-2)}
    return tabulate(Alphabet::first_letters(1), n, [&](State q, Letter) { return up(q, n); },
                    {static_cast<State>(n - 3), static_cast<State>(n - 2)});
}

namespace {

struct FamilyName {
    WitnessFamily family;
    std::string_view name;
};

constexpr std::array<FamilyName, 24> kFamilies{{
    {WitnessFamily::UnionK, "union_K"},
    {WitnessFamily::UnionL, "union_L"},
    {WitnessFamily::InterK, "inter_K"},
    {WitnessFamily::InterL, "inter_L"},
    {WitnessFamily::ProdK, "prod_K"},
    {WitnessFamily::ProdL, "prod_L"},
    {WitnessFamily::LeftIdealL, "left_ideal_L"},
    {WitnessFamily::RightIdealK, "right_ideal_K"},
    {WitnessFamily::ProdN2K, "prod_n2_K"},
    {WitnessFamily::ProdN2L, "prod_n2_L"},
    {WitnessFamily::StarDn, "star_Dn"},
    {WitnessFamily::StarN2, "star_n2"},
    {WitnessFamily::ReversalDn, "reversal_Dn"},
    {WitnessFamily::ReversalN1, "reversal_n1"},
    {WitnessFamily::ReversalN2, "reversal_n2"},
    {WitnessFamily::UnaryUnionK, "unary_union_K"},
    {WitnessFamily::UnaryUnionL, "unary_union_L"},
    {WitnessFamily::UnaryInterK, "unary_inter_K"},
    {WitnessFamily::UnaryInterL, "unary_inter_L"},
    {WitnessFamily::UnaryDiffK, "unary_diff_K"},
    {WitnessFamily::UnaryDiffL, "unary_diff_L"},
    {WitnessFamily::UnaryProdK, "unary_prod_K"},
    {WitnessFamily::UnaryProdL, "unary_prod_L"},
    {WitnessFamily::UnaryStar, "unary_star"},
}};

std::size_t need(const std::optional<std::size_t>& value, std::string_view family, const char* param) {
    if (!value) {
        throw ConfigError(std::string(family) + " needs --" + param);
    }
    return *value;
}

}  // namespace

std::string_view to_string(WitnessFamily family) noexcept {
    for (const auto& f : kFamilies) {
        if (f.family == family) {
            return f.name;
        }
    }
    return "?";
}

std::optional<WitnessFamily> parse_witness_family(std::string_view name) noexcept {
    for (const auto& f : kFamilies) {
        if (f.name == name) {
            return f.family;
        }
    }
    return std::nullopt;
}

const std::vector<WitnessFamily>& all_witness_families() {
    static const std::vector<WitnessFamily> families = [] {
        std::vector<WitnessFamily> out;
        for (const auto& f : kFamilies) {
            out.push_back(f.family);
        }
        return out;
    }();
    return families;
}

Dfa generate_witness(const WitnessSpec& spec) {
    const auto name = to_string(spec.family);
    auto m = [&] { return need(spec.m, name, "m"); };
    auto n = [&] { return need(spec.n, name, "n"); };
    // Families whose single parameter is "the" complexity accept either --m or --n.
    auto either = [&] {
        if (spec.n) return *spec.n;
        return need(spec.m, name, "n");
    };
    switch (spec.family) {
        case WitnessFamily::UnionK: return union_witnesses(m(), 2).first;
        case WitnessFamily::UnionL: return union_witnesses(2, n()).second;
        case WitnessFamily::InterK: return intersection_witnesses(m(), 1).first;
        case WitnessFamily::InterL: return intersection_witnesses(1, n()).second;
        case WitnessFamily::ProdK: return product_witnesses(m(), 3).first;
        case WitnessFamily::ProdL: return product_witnesses(1, n()).second;
        case WitnessFamily::LeftIdealL: return left_ideal_witness(n());
        case WitnessFamily::RightIdealK: return right_ideal_witness(m());
        case WitnessFamily::ProdN2K: return product_n2_witnesses(m()).first;
        case WitnessFamily::ProdN2L: return product_n2_witnesses(2).second;
        case WitnessFamily::StarDn: return star_witness(either(), spec.letters.value_or(4));
        case WitnessFamily::StarN2: return star_small_witness(either());
        case WitnessFamily::ReversalDn: {
            const auto size = either();
            require(size >= 3, "reversal_Dn needs n >= 3 (use reversal_n1 / reversal_n2)");
            return reversal_witness(size);
        }
        case WitnessFamily::ReversalN1: return reversal_witness(1);
        case WitnessFamily::ReversalN2: return reversal_witness(2);
        case WitnessFamily::UnaryUnionK: return unary_boolean_witnesses(BooleanOp::Union, m(), 1).first;
        case WitnessFamily::UnaryUnionL: return unary_boolean_witnesses(BooleanOp::Union, 1, n()).second;
        case WitnessFamily::UnaryInterK: return unary_boolean_witnesses(BooleanOp::Intersection, m(), 1).first;
        case WitnessFamily::UnaryInterL: return unary_boolean_witnesses(BooleanOp::Intersection, 1, n()).second;
        case WitnessFamily::UnaryDiffK: return unary_boolean_witnesses(BooleanOp::Difference, m(), 1).first;
        case WitnessFamily::UnaryDiffL: return unary_boolean_witnesses(BooleanOp::Difference, 1, n()).second;
        case WitnessFamily::UnaryProdK: return unary_product_witnesses(m(), 1).first;
        case WitnessFamily::UnaryProdL: return unary_product_witnesses(1, n()).second;
        case WitnessFamily::UnaryStar: return unary_star_witness(either());
    }
    throw ConfigError("unknown witness family");
}

}  // namespace starfree
