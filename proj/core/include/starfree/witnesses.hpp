#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "starfree/dfa.hpp"
#include "starfree/lang_ops.hpp"

namespace starfree {

// Witness families. Each generator builds the automaton straight from its
// transition table; state 0 here is state 1 in the printed numbering.
// Parameters out of range throw ConfigError.

/// Union/difference pair over {a,b}: K = {w : |w|_a = m-2}, L = {w : |w|_b = n-2}.
/// m = 1 (or n = 1) gives the empty language.
std::pair<Dfa, Dfa> union_witnesses(std::size_t m, std::size_t n);

/// Intersection/symmetric-difference pair over {a,b}: K = {|w|_a >= m-1}, L = {|w|_b >= n-1}.
std::pair<Dfa, Dfa> intersection_witnesses(std::size_t m, std::size_t n);

/// Quaternary product pair over {a,b,c,d}; m >= 1, n >= 3.
///
/// K: a counts up to q_m, b counts down, c is the identity, d jumps to q_m; F = {q_m}.
/// L: c counts up, d counts down, a moves 2..n-1 up while fixing 1 and n, b is the identity; F = {n-1}.
std::pair<Dfa, Dfa> product_witnesses(std::size_t m, std::size_t n);

/// L of product_witnesses restricted to {a,c,d}; n >= 3.
Dfa left_ideal_witness(std::size_t n);

/// a^(m-1) a* over {a}; m >= 1.
Dfa right_ideal_witness(std::size_t m);

/// K of product_witnesses restricted to {a,b,c}, and the 2-state L over
/// {a,b,c} where a fixes, b resets to 1, c sends to 2; F_L = {1}. m >= 2.
std::pair<Dfa, Dfa> product_n2_witnesses(std::size_t m);

/// D_n restricted to its first `letters` letters of a, b, c, d; n >= 3, letters in {2,3,4}.
Dfa star_witness(std::size_t n, std::size_t letters);

/// n = 1: the empty language over {a}; n = 2: b*aΣ* over {a,b}.
Dfa star_small_witness(std::size_t n);

/// n = 1: a*; n = 2: Σ*a over {a,b}; n >= 3: the (n-1)-letter automaton over
/// {a, b, c3, ..., c(n-1)} with F = even states and c_j moving only j to j-1.
Dfa reversal_witness(std::size_t n);

// Unary star-free witnesses (alphabet {a}).

/// {a^k}: k + 2 quotients.
Dfa unary_word(std::size_t k);
/// a^k a*: k + 1 quotients.
Dfa unary_at_least(std::size_t k);

/// Operands for a boolean operation with unary complexities m and n.
/// Union and symmetric difference: a^(m-2), a^(n-2) (the empty language for 1).
/// Intersection: a^(m-1)a*, a^(n-1)a*. Difference: a^(m-1)a* and the complement of a^(n-1)a*.
std::pair<Dfa, Dfa> unary_boolean_witnesses(BooleanOp op, std::size_t m, std::size_t n);
/// a^(m-1)a*, a^(n-1)a*.
std::pair<Dfa, Dfa> unary_product_witnesses(std::size_t m, std::size_t n);
/// n = 1: ∅; n = 2: {ε}; 3 <= n <= 5: a^(n-1)a*; n >= 6: {a^(n-3), a^(n-2)}.
Dfa unary_star_witness(std::size_t n);

/// Named families for the command line.
enum class WitnessFamily {
    UnionK, UnionL, InterK, InterL, ProdK, ProdL, LeftIdealL, RightIdealK, ProdN2K, ProdN2L,
    StarDn, StarN2, ReversalDn, ReversalN1, ReversalN2,
    UnaryUnionK, UnaryUnionL, UnaryInterK, UnaryInterL, UnaryDiffK, UnaryDiffL, UnaryProdK, UnaryProdL, UnaryStar,
};

struct WitnessSpec {
    WitnessFamily family;
    std::optional<std::size_t> m;
    std::optional<std::size_t> n;
    std::optional<std::size_t> letters;  // StarDn only; defaults to 4
};

std::string_view to_string(WitnessFamily family) noexcept;
std::optional<WitnessFamily> parse_witness_family(std::string_view name) noexcept;
const std::vector<WitnessFamily>& all_witness_families();

/// Throws ConfigError when a required parameter is missing or out of range.
Dfa generate_witness(const WitnessSpec& spec);

}  // namespace starfree
