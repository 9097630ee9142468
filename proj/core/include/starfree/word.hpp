#pragma once

#include <cstddef>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starfree/alphabet.hpp"
#include "starfree/types.hpp"

namespace starfree {

class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> symbols) : symbols_(std::move(symbols)) {}

    /// Parses letter names. Single-character alphabets read one letter per
    /// character; otherwise names are separated by spaces, commas or dots.
    /// "" and "ε" denote the empty word.
    static Word parse(const Alphabet& alphabet, std::string_view text);

    std::size_t length() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    std::size_t count(Letter letter) const noexcept;
    std::span<const Letter> symbols() const noexcept { return symbols_; }
    Letter operator[](std::size_t i) const { return symbols_[i]; }

    Word reversed() const;
    Word appended(Letter letter) const;
    Word prefix(std::size_t length) const;
    Word suffix_from(std::size_t start) const;

    /// Throws InputError if a symbol is not a letter of an alphabet of the given size.
    void check_over(std::size_t alphabet_size) const;

    /// Letter names joined (with '.' unless the alphabet is single-character); "ε" when empty.
    std::string to_string(const Alphabet& alphabet) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> symbols_;
};

/// Default ceiling on the number of words a single enumeration may produce.
/// With two letters this allows every word of length up to 12.
inline constexpr std::size_t kDefaultWordBudget = (std::size_t{1} << 13) - 1;

/// Number of words of length at most `max_len` over `alphabet_size` letters
/// (saturates at SIZE_MAX).
std::size_t word_count_up_to(std::size_t alphabet_size, std::size_t max_len) noexcept;

/// Longest `max_len` whose enumeration stays within `budget` words.
std::size_t max_length_within(std::size_t alphabet_size, std::size_t budget = kDefaultWordBudget) noexcept;

/// All words of length <= max_len in length-then-lexicographic order.
class WordStream {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Word;
        using difference_type = std::ptrdiff_t;
        using pointer = const Word*;
        using reference = const Word&;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_); }

    private:
        friend class WordStream;
        iterator(std::size_t alphabet_size, std::size_t max_len) : alphabet_size_(alphabet_size), max_len_(max_len), done_(false) {}

        std::size_t alphabet_size_ = 0;
        std::size_t max_len_ = 0;
        bool done_ = true;
        Word current_;
        std::vector<Letter> buffer_;
    };

    iterator begin() const { return iterator(alphabet_size_, max_len_); }
    iterator end() const { return iterator(); }
    std::size_t size() const noexcept { return word_count_up_to(alphabet_size_, max_len_); }

private:
    friend WordStream words_up_to(const Alphabet&, std::size_t, std::size_t);
    friend WordStream words_up_to(std::size_t, std::size_t, std::size_t);
    WordStream(std::size_t alphabet_size, std::size_t max_len) : alphabet_size_(alphabet_size), max_len_(max_len) {}

    std::size_t alphabet_size_;
    std::size_t max_len_;
};

/// Throws ConfigError when the enumeration would exceed `budget` words.
WordStream words_up_to(const Alphabet& alphabet, std::size_t max_len, std::size_t budget = kDefaultWordBudget);
WordStream words_up_to(std::size_t alphabet_size, std::size_t max_len, std::size_t budget = kDefaultWordBudget);

}  // namespace starfree
