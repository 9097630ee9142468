#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "starfree/dfa.hpp"
#include "starfree/nfa.hpp"
#include "starfree/state_set.hpp"
#include "starfree/word.hpp"

namespace starfree {

/// Membership by the extended transition function. Throws InputError on a foreign symbol.
bool run_dfa(const Dfa& dfa, const Word& w);

/// Membership by ε-closed subset simulation. Throws InputError on a foreign symbol.
bool run_nfa(const Nfa& nfa, const Word& w);

/// Subset construction over ε-closed subsets.
///
/// States of the result are the subsets reachable from the closure of the
/// initial states, numbered in discovery order (breadth first, letters in
/// alphabet order). The empty subset appears as an ordinary dead state when
/// it is reachable. A zero-state Nfa yields a one-state reject-all Dfa.
Dfa determinize(const Nfa& nfa);

struct TracedDeterminization {
    Dfa dfa;
    std::vector<StateSet> subsets;  // subsets[q] is the Nfa subset behind Dfa state q
};

/// determinize() that also reports the subset behind each result state.
TracedDeterminization determinize_traced(const Nfa& nfa);

/// States reachable from the initial state, in BFS order (letters in alphabet order).
std::vector<State> reachable_states(const Dfa& dfa);

/// Renumbers reachable states by BFS from the initial state and drops the rest.
Dfa canonical_form(const Dfa& dfa);

/// Minimal complete Dfa for the same language, in canonical numbering.
/// Hopcroft partition refinement over the reachable part.
Dfa minimize(const Dfa& dfa);

/// κ: number of quotients, i.e. states of the minimal complete Dfa (the
/// empty quotient counts when present).
std::size_t quotient_complexity(const Dfa& dfa);

/// True iff some bijection of states preserves initial, finals and every
/// transition, with letters matched by index. Letter names are ignored.
/// Callers minimize first; differing alphabet sizes compare false.
bool is_isomorphic(const Dfa& a, const Dfa& b);

/// Relabels letters: letter `a` of the result behaves as letter `permutation[a]` of `dfa`.
/// The result's alphabet keeps `dfa`'s names in their original order.
Dfa permute_letters(const Dfa& dfa, std::span<const Letter> permutation);

/// Restriction of `dfa` to the given letters (in the given order).
Dfa restrict_letters(const Dfa& dfa, std::span<const Letter> keep);

}  // namespace starfree
