#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "starfree/alphabet.hpp"
#include "starfree/dfa.hpp"
#include "starfree/types.hpp"

namespace starfree {

/// Nondeterministic automaton with a set of initial states and, when
/// enabled at construction, spontaneous (ε) moves.
class Nfa {
public:
    struct Move {
        State from;
        Letter on;  // kEpsilon for a spontaneous move
        State to;
    };

    /// Throws InputError if a state is out of range, a letter is foreign, or
    /// an ε-move appears while `allow_epsilon` is false. A zero-state Nfa is allowed.
    Nfa(Alphabet alphabet, std::size_t state_count, std::span<const Move> moves, std::span<const State> initials,
        std::span<const State> finals, bool allow_epsilon = false);

    static Nfa from_dfa(const Dfa& dfa);

    std::size_t state_count() const noexcept { return state_count_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    bool allows_epsilon() const noexcept { return allow_epsilon_; }
    bool has_epsilon_moves() const noexcept;

    /// Sorted, duplicate-free successors; `on` may be kEpsilon.
    std::span<const State> successors(State q, Letter on) const;
    const std::vector<State>& initials() const noexcept { return initials_; }
    const std::vector<State>& finals() const noexcept { return finals_; }
    bool is_final(State q) const noexcept;

    /// All moves in (from, letter, to) order, with ε last for each state.
    std::vector<Move> moves() const;

    /// States reachable from `from` by ε-moves, including `from`. Sorted.
    std::vector<State> epsilon_closure(std::span<const State> from) const;

private:
    std::size_t slot(State q, Letter on) const noexcept {
        return static_cast<std::size_t>(q) * (alphabet_.size() + 1) + (on == kEpsilon ? alphabet_.size() : on);
    }

    Alphabet alphabet_;
    std::size_t state_count_;
    bool allow_epsilon_;
    std::vector<std::vector<State>> successors_;
    std::vector<State> initials_;
    std::vector<State> finals_;
    std::vector<bool> final_flags_;
};

}  // namespace starfree
