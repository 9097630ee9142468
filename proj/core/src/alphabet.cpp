#include "starfree/alphabet.hpp"

#include <unordered_set>

#include "starfree/errors.hpp"

namespace starfree {

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw InputError("alphabet must not be empty");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& name : letters_) {
        if (name.empty()) {
            throw InputError("alphabet letter names must be non-empty");
        }
        if (!seen.insert(name).second) {
            throw InputError("duplicate alphabet letter '" + name + "'");
        }
    }
}

Alphabet Alphabet::first_letters(std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "l" + std::to_string(i));
    }
    return Alphabet(std::move(names));
}

std::optional<Letter> Alphabet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] == name) {
            return static_cast<Letter>(i);
        }
    }
    return std::nullopt;
}

bool Alphabet::single_char() const noexcept {
    for (const auto& name : letters_) {
        if (name.size() != 1) {
            return false;
        }
    }
    return true;
}

Alphabet Alphabet::restricted(std::span<const Letter> keep) const {
    std::vector<std::string> names;
    names.reserve(keep.size());
    for (Letter a : keep) {
        names.push_back(name(a));
    }
    return Alphabet(std::move(names));
}

}  // namespace starfree
