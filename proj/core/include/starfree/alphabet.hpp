#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starfree/types.hpp"

namespace starfree {

/// Ordered set of distinct, non-empty letter names.
///
/// The order is fixed at construction and is the order used for BFS
/// canonicalization, word enumeration and serialization.
class Alphabet {
public:
    /// Throws InputError on an empty list, an empty name or a duplicate.
    explicit Alphabet(std::vector<std::string> letters);

    /// The first `count` letters of a, b, c, ...; past z the names are l26, l27, ...
    static Alphabet first_letters(std::size_t count);

    std::size_t size() const noexcept { return letters_.size(); }
    const std::string& name(Letter letter) const { return letters_.at(letter); }
    const std::vector<std::string>& letters() const noexcept { return letters_; }
    std::optional<Letter> index_of(std::string_view name) const;

    /// True when every name is a single character, so words can be written unseparated.
    bool single_char() const noexcept;

    /// Sub-alphabet keeping the given letters, in the given order.
    Alphabet restricted(std::span<const Letter> keep) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> letters_;
};

}  // namespace starfree
