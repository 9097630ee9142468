#include "starfree/nfa.hpp"

#include <algorithm>

#include "starfree/errors.hpp"

namespace starfree {

Nfa::Nfa(Alphabet alphabet, std::size_t state_count, std::span<const Move> moves, std::span<const State> initials,
         std::span<const State> finals, bool allow_epsilon)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      allow_epsilon_(allow_epsilon),
      successors_(state_count * (alphabet_.size() + 1)),
      initials_(initials.begin(), initials.end()),
      finals_(finals.begin(), finals.end()),
      final_flags_(state_count, false) {
    auto check_state = [&](State q, const char* what) {
        if (q >= state_count_) {
            throw InputError(std::string(what) + " state " + std::to_string(q + 1) + " out of range");
        }
    };
    for (const auto& m : moves) {
        check_state(m.from, "move source");
        check_state(m.to, "move target");
        if (m.on == kEpsilon) {
            if (!allow_epsilon_) {
                throw InputError("ε-move from state " + std::to_string(m.from + 1) + " in an NFA without ε-moves");
            }
        } else if (m.on >= alphabet_.size()) {
            throw InputError("move from state " + std::to_string(m.from + 1) + " uses letter index " +
                             std::to_string(m.on) + ", outside the alphabet");
        }
        successors_[slot(m.from, m.on)].push_back(m.to);
    }
    for (auto& targets : successors_) {
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    }
    for (State q : initials_) {
        check_state(q, "initial");
    }
    for (State q : finals_) {
        check_state(q, "final");
        final_flags_[q] = true;
    }
    std::sort(initials_.begin(), initials_.end());
    initials_.erase(std::unique(initials_.begin(), initials_.end()), initials_.end());
    std::sort(finals_.begin(), finals_.end());
    finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
}

Nfa Nfa::from_dfa(const Dfa& dfa) {
    std::vector<Move> moves;
    moves.reserve(dfa.state_count() * dfa.letter_count());
    for (State q = 0; q < dfa.state_count(); ++q) {
        for (Letter a = 0; a < dfa.letter_count(); ++a) {
            moves.push_back({q, a, dfa.next(q, a)});
        }
    }
    const State initial = dfa.initial();
    const auto finals = dfa.finals();
    return Nfa(dfa.alphabet(), dfa.state_count(), moves, std::span<const State>(&initial, 1), finals, false);
}

bool Nfa::has_epsilon_moves() const noexcept {
    if (!allow_epsilon_) {
        return false;
    }
    for (State q = 0; q < state_count_; ++q) {
        if (!successors_[slot(q, kEpsilon)].empty()) {
            return true;
        }
    }
    return false;
}

std::span<const State> Nfa::successors(State q, Letter on) const {
    if (q >= state_count_ || (on != kEpsilon && on >= alphabet_.size())) {
        throw InputError("successor query out of range");
    }
    return successors_[slot(q, on)];
}

bool Nfa::is_final(State q) const noexcept {
    return q < state_count_ && final_flags_[q];
}

std::vector<Nfa::Move> Nfa::moves() const {
    std::vector<Move> out;
    for (State q = 0; q < state_count_; ++q) {
        for (Letter a = 0; a < alphabet_.size(); ++a) {
            for (State t : successors_[slot(q, a)]) {
                out.push_back({q, a, t});
            }
        }
        for (State t : successors_[slot(q, kEpsilon)]) {
            out.push_back({q, kEpsilon, t});
        }
    }
    return out;
}

std::vector<State> Nfa::epsilon_closure(std::span<const State> from) const {
    std::vector<bool> seen(state_count_, false);
    std::vector<State> stack;
    for (State q : from) {
        if (q < state_count_ && !seen[q]) {
            seen[q] = true;
            stack.push_back(q);
        }
    }
    while (!stack.empty()) {
        const State q = stack.back();
        stack.pop_back();
        for (State t : successors_[slot(q, kEpsilon)]) {
            if (!seen[t]) {
                seen[t] = true;
                stack.push_back(t);
            }
        }
    }
    std::vector<State> out;
    for (State q = 0; q < state_count_; ++q) {
        if (seen[q]) {
            out.push_back(q);
        }
    }
    return out;
}

}  // namespace starfree
