#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "starfree/dfa.hpp"
#include "starfree/nfa.hpp"

namespace starfree {

enum class BooleanOp { Union, Intersection, Difference, SymmetricDifference };

/// Every operation whose quotient complexity is bounded here.
enum class Operation { Complement, Union, Intersection, Difference, SymmetricDifference, Concat, Star, Reverse };

std::string_view to_string(BooleanOp op) noexcept;
std::string_view to_string(Operation op) noexcept;
/// Accepts the snake_case names printed by to_string, plus "product"/"concatenation" and "reversal".
std::optional<Operation> parse_operation(std::string_view name) noexcept;
std::size_t arity(Operation op) noexcept;
std::optional<BooleanOp> as_boolean(Operation op) noexcept;
bool combine(BooleanOp op, bool in_k, bool in_l) noexcept;

/// Minimized result plus the reachable-state count of the construction before minimization.
struct OpResult {
    Dfa result;
    std::size_t complexity;
    std::size_t construction_states;
};

OpResult complement(const Dfa& dfa);

/// Direct product over reachable state pairs. Throws AlphabetMismatch.
Dfa direct_product(BooleanOp op, const Dfa& k, const Dfa& l);
OpResult boolean_op(BooleanOp op, const Dfa& k, const Dfa& l);

/// ε-NFA for KL: a copy of K whose finals lose their flag and gain an ε-move
/// to L's initial state, followed by a copy of L. K's states come first.
Nfa concat_nfa(const Dfa& k, const Dfa& l);
OpResult concat(const Dfa& k, const Dfa& l);

/// NFA for L*: a fresh accepting initial state 0 that copies the letter moves
/// of L's initial state, then L's states shifted by one, with an ε-move from
/// each final back to L's initial state.
Nfa star_nfa(const Dfa& dfa);
OpResult star(const Dfa& dfa);

/// NFA for the reverse language: every transition reversed, initials = finals, final = {initial}.
Nfa reverse_nfa(const Dfa& dfa);
OpResult reverse(const Dfa& dfa);

/// Dispatch by Operation. `operands` must hold arity(op) automata.
OpResult apply(Operation op, std::span<const Dfa> operands);

}  // namespace starfree
