#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "starfree/alphabet.hpp"
#include "starfree/types.hpp"
#include "starfree/word.hpp"

namespace starfree {

/// Complete deterministic automaton. Immutable once built.
///
/// The transition table is stored row-major: `next(q, a)` is
/// `delta[q * alphabet.size() + a]`. A language whose quotient automaton
/// has an empty quotient carries it as an explicit state.
class Dfa {
public:
    /// Throws InputError if the table has the wrong size, an entry or the
    /// initial state is out of range, a final is out of range, or there are no states.
    Dfa(Alphabet alphabet, std::size_t state_count, std::vector<State> delta, State initial, std::span<const State> finals);

    /// Same as above with the finals given as a per-state flag vector.
    Dfa(Alphabet alphabet, std::size_t state_count, std::vector<State> delta, State initial, std::vector<bool> final_flags);

    /// One row per state, one entry per letter.
    static Dfa from_rows(Alphabet alphabet, const std::vector<std::vector<State>>& rows, State initial, std::span<const State> finals);

    /// One-state automaton accepting everything (`accept_all`) or nothing.
    static Dfa single_state(Alphabet alphabet, bool accept_all);

    std::size_t state_count() const noexcept { return state_count_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t letter_count() const noexcept { return alphabet_.size(); }
    State initial() const noexcept { return initial_; }

    State next(State q, Letter a) const noexcept { return delta_[static_cast<std::size_t>(q) * alphabet_.size() + a]; }
    bool is_final(State q) const noexcept { return final_[q] != 0; }
    std::vector<State> finals() const;
    std::span<const State> delta() const noexcept { return delta_; }
    std::vector<bool> final_flags() const;

    /// State reached from `from` by reading `w`. Throws InputError on a foreign symbol.
    State run_from(State from, const Word& w) const;

    /// Same automaton with every final flag flipped.
    Dfa complemented() const;

    /// Structural equality: same alphabet, numbering, transitions, initial and finals.
    friend bool operator==(const Dfa&, const Dfa&) = default;

private:
    Alphabet alphabet_;
    std::size_t state_count_;
    std::vector<State> delta_;
    State initial_;
    std::vector<std::uint8_t> final_;
};

}  // namespace starfree
