#include "starfree/state_set.hpp"

#include <bit>

namespace starfree {

StateSet::StateSet(std::initializer_list<State> members) {
    for (State q : members) {
        insert(q);
    }
}

StateSet::StateSet(std::span<const State> members) {
    for (State q : members) {
        insert(q);
    }
}

StateSet StateSet::from_mask_words(std::span<const std::uint64_t> words) {
    StateSet s;
    s.words_.assign(words.begin(), words.end());
    s.trim();
    return s;
}

void StateSet::insert(State q) {
    const std::size_t w = q / 64;
    if (w >= words_.size()) {
        words_.resize(w + 1, 0);
    }
    words_[w] |= std::uint64_t{1} << (q % 64);
}

void StateSet::erase(State q) {
    const std::size_t w = q / 64;
    if (w < words_.size()) {
        words_[w] &= ~(std::uint64_t{1} << (q % 64));
        trim();
    }
}

bool StateSet::contains(State q) const noexcept {
    const std::size_t w = q / 64;
    return w < words_.size() && ((words_[w] >> (q % 64)) & 1U) != 0;
}

std::size_t StateSet::size() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::vector<State> StateSet::members() const {
    std::vector<State> out;
    out.reserve(size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits != 0) {
            const int b = std::countr_zero(bits);
            out.push_back(static_cast<State>(w * 64 + static_cast<std::size_t>(b)));
            bits &= bits - 1;
        }
    }
    return out;
}

bool StateSet::intersects(const StateSet& other) const noexcept {
    const auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if ((words_[i] & other.words_[i]) != 0) {
            return true;
        }
    }
    return false;
}

StateSet& StateSet::operator|=(const StateSet& other) {
    if (other.words_.size() > words_.size()) {
        words_.resize(other.words_.size(), 0);
    }
    for (std::size_t i = 0; i < other.words_.size(); ++i) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

std::string StateSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (State q : members()) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += std::to_string(q + 1);
    }
    return out + "}";
}

std::size_t StateSet::hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) {
        h ^= static_cast<std::size_t>(w);
        h *= 0x100000001b3ULL;
        h ^= h >> 29;
    }
    return h;
}

void StateSet::trim() {
    while (!words_.empty() && words_.back() == 0) {
        words_.pop_back();
    }
}

}  // namespace starfree
