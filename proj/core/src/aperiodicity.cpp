#include "starfree/aperiodicity.hpp"

#include <cstdint>

#include "starfree/errors.hpp"

namespace starfree {

std::optional<std::size_t> TransitionMonoid::find(const Transformation& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

TransitionMonoid transition_monoid(const Dfa& dfa, std::size_t budget) {
    TransitionMonoid monoid;
    for (Letter a = 0; a < dfa.letter_count(); ++a) {
        monoid.generators.push_back(letter_transformation(dfa, a));
    }
    auto add = [&](Transformation t, Word w) {
        if (monoid.elements.size() >= budget) {
            throw ResourceError("transition monoid of the " + std::to_string(dfa.state_count()) + "-state DFA over " +
                                std::to_string(dfa.letter_count()) + " letters exceeds the budget of " +
                                std::to_string(budget) + " elements");
        }
        monoid.index_.emplace(t, monoid.elements.size());
        monoid.elements.push_back(std::move(t));
        monoid.witness_words.push_back(std::move(w));
    };
    add(Transformation::identity(dfa.state_count()), Word());
    // Breadth first with letters in order: each element is first met through
    // its shortlex-least word.
    for (std::size_t i = 0; i < monoid.elements.size(); ++i) {
        for (Letter a = 0; a < dfa.letter_count(); ++a) {
            auto next = monoid.elements[i].then(monoid.generators[a]);
            if (!monoid.index_.contains(next)) {
                add(std::move(next), monoid.witness_words[i].appended(a));
            }
        }
    }
    return monoid;
}

PowerCycle power_cycle(const Transformation& t) {
    // Powers t, t^2, ... until the first repeat t^i == t^j, i < j.
    std::unordered_map<Transformation, std::size_t, TransformationHash> seen;
    Transformation power = t;
    for (std::size_t exponent = 1;; ++exponent) {
        auto [it, fresh] = seen.emplace(power, exponent);
        if (!fresh) {
            return {it->second, exponent - it->second};
        }
        power = power.then(t);
    }
}

bool is_aperiodic_transformation(const Transformation& t) {
    // t^n == t^(n+1) exactly when every cycle of t is a fixed point.
    const std::size_t n = t.size();
    std::vector<std::uint8_t> state(n, 0);  // 0 new, 1 on current path, 2 done
    for (std::size_t start = 0; start < n; ++start) {
        if (state[start] != 0) {
            continue;
        }
        std::vector<State> path;
        State q = static_cast<State>(start);
        while (state[q] == 0) {
            state[q] = 1;
            path.push_back(q);
            q = t(q);
        }
        if (state[q] == 1 && t(q) != q) {
            return false;
        }
        for (State p : path) {
            state[p] = 2;
        }
    }
    return true;
}

AperiodicityReport is_aperiodic(const Dfa& dfa, std::size_t budget) {
    const auto monoid = transition_monoid(dfa, budget);
    for (std::size_t i = 0; i < monoid.size(); ++i) {
        const auto& t = monoid.elements[i];
        if (is_aperiodic_transformation(t)) {
            continue;
        }
        const auto cycle = power_cycle(t);
        // t permutes the range of t^index with order `period`.
        Transformation stable = t;
        for (std::size_t e = 1; e < cycle.index; ++e) {
            stable = stable.then(t);
        }
        return {false, monoid.size(), PermutationCertificate{monoid.witness_words[i], StateSet(stable.range())}};
    }
    return {true, monoid.size(), std::nullopt};
}

bool is_nondecreasing(const Dfa& dfa) {
    for (Letter a = 0; a < dfa.letter_count(); ++a) {
        if (!letter_transformation(dfa, a).is_nondecreasing()) {
            return false;
        }
    }
    return true;
}

}  // namespace starfree
