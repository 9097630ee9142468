#include "starfree/dfa.hpp"

#include "starfree/errors.hpp"

namespace starfree {

namespace {

void validate_table(std::size_t state_count, std::size_t letters, const std::vector<State>& delta, State initial) {
    if (state_count == 0) {
        throw InputError("a DFA needs at least one state");
    }
    if (delta.size() != state_count * letters) {
        throw InputError("transition table has " + std::to_string(delta.size()) + " entries, expected " +
                         std::to_string(state_count * letters));
    }
    for (std::size_t i = 0; i < delta.size(); ++i) {
        if (delta[i] >= state_count) {
            throw InputError("transition from state " + std::to_string(i / letters + 1) + " on letter " +
                             std::to_string(i % letters) + " leads to state " + std::to_string(delta[i] + 1) +
                             ", out of range");
        }
    }
    if (initial >= state_count) {
        throw InputError("initial state " + std::to_string(initial + 1) + " out of range");
    }
}

}  // namespace

Dfa::Dfa(Alphabet alphabet, std::size_t state_count, std::vector<State> delta, State initial, std::span<const State> finals)
    : alphabet_(std::move(alphabet)), state_count_(state_count), delta_(std::move(delta)), initial_(initial), final_(state_count, 0) {
    validate_table(state_count_, alphabet_.size(), delta_, initial_);
    for (State f : finals) {
        if (f >= state_count_) {
            throw InputError("final state " + std::to_string(f + 1) + " out of range");
        }
        final_[f] = 1;
    }
}

Dfa::Dfa(Alphabet alphabet, std::size_t state_count, std::vector<State> delta, State initial, std::vector<bool> final_flags)
    : alphabet_(std::move(alphabet)), state_count_(state_count), delta_(std::move(delta)), initial_(initial), final_(state_count, 0) {
    validate_table(state_count_, alphabet_.size(), delta_, initial_);
    if (final_flags.size() != state_count_) {
        throw InputError("final flags have " + std::to_string(final_flags.size()) + " entries, expected " +
                         std::to_string(state_count_));
    }
    for (std::size_t q = 0; q < state_count_; ++q) {
        final_[q] = final_flags[q] ? 1 : 0;
    }
}

Dfa Dfa::from_rows(Alphabet alphabet, const std::vector<std::vector<State>>& rows, State initial, std::span<const State> finals) {
    std::vector<State> delta;
    delta.reserve(rows.size() * alphabet.size());
    for (std::size_t q = 0; q < rows.size(); ++q) {
        if (rows[q].size() != alphabet.size()) {
            throw InputError("row " + std::to_string(q + 1) + " has " + std::to_string(rows[q].size()) +
                             " entries, expected " + std::to_string(alphabet.size()));
        }
        delta.insert(delta.end(), rows[q].begin(), rows[q].end());
    }
    const auto n = rows.size();
    return Dfa(std::move(alphabet), n, std::move(delta), initial, finals);
}

Dfa Dfa::single_state(Alphabet alphabet, bool accept_all) {
    const auto letters = alphabet.size();
    std::vector<State> finals;
    if (accept_all) {
        finals.push_back(0);
    }
    return Dfa(std::move(alphabet), 1, std::vector<State>(letters, 0), 0, finals);
}

std::vector<State> Dfa::finals() const {
    std::vector<State> out;
    for (std::size_t q = 0; q < state_count_; ++q) {
        if (final_[q] != 0) {
            out.push_back(static_cast<State>(q));
        }
    }
    return out;
}

std::vector<bool> Dfa::final_flags() const {
    std::vector<bool> out(state_count_);
    for (std::size_t q = 0; q < state_count_; ++q) {
        out[q] = final_[q] != 0;
    }
    return out;
}

State Dfa::run_from(State from, const Word& w) const {
    w.check_over(alphabet_.size());
    State q = from;
    for (Letter a : w.symbols()) {
        q = next(q, a);
    }
    return q;
}

Dfa Dfa::complemented() const {
    Dfa out = *this;
    for (auto& f : out.final_) {
        f = f != 0 ? 0 : 1;
    }
    return out;
}

}  // namespace starfree
