#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "starfree/dfa.hpp"
#include "starfree/state_set.hpp"
#include "starfree/transformation.hpp"
#include "starfree/word.hpp"

namespace starfree {

inline constexpr std::size_t kDefaultMonoidBudget = 1'000'000;

/// Monoid of maps performed by all words, identity included.
///
/// Elements are listed in order of their shortest generating word, ties
/// broken lexicographically; `witness_words[i]` generates `elements[i]`.
struct TransitionMonoid {
    std::vector<Transformation> generators;  // one per letter
    std::vector<Transformation> elements;
    std::vector<Word> witness_words;

    std::size_t size() const noexcept { return elements.size(); }
    /// Index of `t` among the elements, if present.
    std::optional<std::size_t> find(const Transformation& t) const;

private:
    friend TransitionMonoid transition_monoid(const Dfa&, std::size_t);
    std::unordered_map<Transformation, std::size_t, TransformationHash> index_;
};

/// Breadth-first closure of the letter maps. Throws ResourceError naming the
/// automaton size when more than `budget` elements appear.
TransitionMonoid transition_monoid(const Dfa& dfa, std::size_t budget = kDefaultMonoidBudget);

/// Where the powers t, t^2, ... first repeat: t^index == t^(index + period).
struct PowerCycle {
    std::size_t index;
    std::size_t period;
};
PowerCycle power_cycle(const Transformation& t);

/// A word acting as a non-identity permutation of `subset`.
struct PermutationCertificate {
    Word word;
    StateSet subset;
};

struct AperiodicityReport {
    bool aperiodic;
    std::size_t monoid_size;
    std::optional<PermutationCertificate> certificate;  // set iff !aperiodic
};

/// Exact test: every monoid element t satisfies t^k = t^(k+1) for some k.
/// The certificate comes from the first failing element in monoid order; its
/// subset is the eventual image of that element, which it permutes.
AperiodicityReport is_aperiodic(const Dfa& dfa, std::size_t budget = kDefaultMonoidBudget);

/// True iff the powers of `t` stabilize (no cycle of length >= 2 in its functional graph).
bool is_aperiodic_transformation(const Transformation& t);

/// True iff every letter map is non-decreasing in the given numbering.
bool is_nondecreasing(const Dfa& dfa);

}  // namespace starfree
