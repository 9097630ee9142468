#pragma once

#include <stdexcept>

namespace starfree {

/// Malformed automaton, word or file contents.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Binary operation applied to operands over different alphabets.
class AlphabetMismatch : public InputError {
public:
    using InputError::InputError;
};

/// A request outside a configured range (word-length budget, witness parameters).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation would exceed its element or candidate budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace starfree
