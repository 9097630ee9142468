#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "starfree/types.hpp"

namespace starfree {

/// Set of state indices backed by a dense bitmask.
///
/// Two sets are equal iff they have the same members, regardless of the
/// capacity they were built with.
class StateSet {
public:
    StateSet() = default;
    StateSet(std::initializer_list<State> members);
    explicit StateSet(std::span<const State> members);

    /// Builds a set from raw 64-bit mask words (bit i of word w is state 64w+i).
    static StateSet from_mask_words(std::span<const std::uint64_t> words);

    void insert(State q);
    void erase(State q);
    bool contains(State q) const noexcept;
    std::size_t size() const noexcept;
    bool empty() const noexcept { return words_.empty(); }

    /// Members in increasing order.
    std::vector<State> members() const;
    bool intersects(const StateSet& other) const noexcept;

    StateSet& operator|=(const StateSet& other);
    friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }

    /// "{1,3,4}" using 1-based numbering.
    std::string to_string() const;

    friend bool operator==(const StateSet&, const StateSet&) = default;
    /// Orders by member list lexicographically.
    friend bool operator<(const StateSet& a, const StateSet& b) { return a.members() < b.members(); }

    std::size_t hash() const noexcept;

private:
    void trim();
    std::vector<std::uint64_t> words_;  // no trailing zero words
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const noexcept { return s.hash(); }
};

}  // namespace starfree
