#include "starfree/word.hpp"

#include <algorithm>
#include <limits>

#include "starfree/errors.hpp"

namespace starfree {

Word Word::parse(const Alphabet& alphabet, std::string_view text) {
    std::vector<Letter> symbols;
    if (text.empty() || text == "ε" || text == "eps") {
        return Word();
    }
    if (alphabet.single_char()) {
        for (char c : text) {
            auto letter = alphabet.index_of(std::string_view(&c, 1));
            if (!letter) {
                throw InputError("'" + std::string(1, c) + "' is not a letter of the alphabet");
            }
            symbols.push_back(*letter);
        }
        return Word(std::move(symbols));
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find_first_of(" ,.", pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto token = text.substr(pos, end - pos);
        if (!token.empty()) {
            auto letter = alphabet.index_of(token);
            if (!letter) {
                throw InputError("'" + std::string(token) + "' is not a letter of the alphabet");
            }
            symbols.push_back(*letter);
        }
        pos = end + 1;
    }
    return Word(std::move(symbols));
}

std::size_t Word::count(Letter letter) const noexcept {
    return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), letter));
}

Word Word::reversed() const {
    return Word(std::vector<Letter>(symbols_.rbegin(), symbols_.rend()));
}

Word Word::appended(Letter letter) const {
    auto symbols = symbols_;
    symbols.push_back(letter);
    return Word(std::move(symbols));
}

Word Word::prefix(std::size_t length) const {
    return Word(std::vector<Letter>(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(std::min(length, symbols_.size()))));
}

Word Word::suffix_from(std::size_t start) const {
    return Word(std::vector<Letter>(symbols_.begin() + static_cast<std::ptrdiff_t>(std::min(start, symbols_.size())), symbols_.end()));
}

void Word::check_over(std::size_t alphabet_size) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] >= alphabet_size) {
            throw InputError("symbol " + std::to_string(symbols_[i]) + " at position " + std::to_string(i) +
                             " is outside an alphabet of " + std::to_string(alphabet_size) + " letters");
        }
    }
}

std::string Word::to_string(const Alphabet& alphabet) const {
    if (symbols_.empty()) {
        return "ε";
    }
    const bool compact = alphabet.single_char();
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i > 0 && !compact) {
            out += '.';
        }
        out += alphabet.name(symbols_[i]);
    }
    return out;
}

std::size_t word_count_up_to(std::size_t alphabet_size, std::size_t max_len) noexcept {
    constexpr auto kMax = std::numeric_limits<std::size_t>::max();
    std::size_t total = 0;
    std::size_t layer = 1;
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (total > kMax - layer) {
            return kMax;
        }
        total += layer;
        if (len == max_len) {
            break;
        }
        if (alphabet_size != 0 && layer > kMax / alphabet_size) {
            return kMax;
        }
        layer *= alphabet_size;
    }
    return total;
}

std::size_t max_length_within(std::size_t alphabet_size, std::size_t budget) noexcept {
    if (budget == 0) {
        return 0;
    }
    if (alphabet_size <= 1) {
        return budget - 1;
    }
    std::size_t len = 0;
    while (word_count_up_to(alphabet_size, len + 1) <= budget) {
        ++len;
    }
    return len;
}

WordStream::iterator& WordStream::iterator::operator++() {
    if (done_) {
        return *this;
    }
    // Increment in base alphabet_size from the last position; on overflow grow the length.
    auto& s = buffer_;
    std::size_t i = s.size();
    while (i > 0) {
        --i;
        if (s[i] + 1 < alphabet_size_) {
            ++s[i];
            current_ = Word(s);
            return *this;
        }
        s[i] = 0;
    }
    if (s.size() + 1 > max_len_ || alphabet_size_ == 0) {
        done_ = true;
        current_ = Word();
        return *this;
    }
    s.assign(s.size() + 1, 0);
    current_ = Word(s);
    return *this;
}

WordStream words_up_to(std::size_t alphabet_size, std::size_t max_len, std::size_t budget) {
    if (word_count_up_to(alphabet_size, max_len) > budget) {
        throw ConfigError("enumerating words up to length " + std::to_string(max_len) + " over " +
                          std::to_string(alphabet_size) + " letters exceeds the budget of " + std::to_string(budget) +
                          " words");
    }
    return WordStream(alphabet_size, max_len);
}

WordStream words_up_to(const Alphabet& alphabet, std::size_t max_len, std::size_t budget) {
    return words_up_to(alphabet.size(), max_len, budget);
}

}  // namespace starfree
