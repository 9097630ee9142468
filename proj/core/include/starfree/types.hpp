#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

namespace starfree {

/// 0-based state index. Files and displays use 1-based numbering.
using State = std::uint32_t;

/// Index of a letter in an Alphabet.
using Letter = std::uint32_t;

/// Pseudo-letter used for spontaneous moves in an Nfa.
inline constexpr Letter kEpsilon = std::numeric_limits<Letter>::max();

}  // namespace starfree
