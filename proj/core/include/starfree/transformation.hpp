#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "starfree/dfa.hpp"
#include "starfree/types.hpp"
#include "starfree/word.hpp"

namespace starfree {

/// Total self-map of {0, ..., n-1}; entry k of the image is where state k goes.
class Transformation {
public:
    /// Throws InputError if an entry is >= the image length.
    explicit Transformation(std::vector<State> image);

    static Transformation identity(std::size_t n);

    std::size_t size() const noexcept { return image_.size(); }
    State operator()(State q) const { return image_[q]; }
    std::span<const State> image() const noexcept { return image_; }

    /// Apply this map, then `next` (word order: the map of uv is t_u.then(t_v)).
    Transformation then(const Transformation& next) const;

    bool is_identity() const noexcept;
    bool is_nondecreasing() const noexcept;
    bool is_permutation() const noexcept;

    /// Sorted, duplicate-free set of images.
    std::vector<State> range() const;

    /// "(2 2 3)" in 1-based notation.
    std::string to_string() const;

    friend bool operator==(const Transformation&, const Transformation&) = default;
    friend auto operator<=>(const Transformation&, const Transformation&) = default;

private:
    Transformation() = default;

    std::vector<State> image_;
};

struct TransformationHash {
    std::size_t operator()(const Transformation& t) const noexcept;
};

/// The map q -> delta(q, letter).
Transformation letter_transformation(const Dfa& dfa, Letter letter);

/// The map q -> delta(q, w). The empty word gives the identity.
Transformation transformation_of_word(const Dfa& dfa, const Word& w);

/// Every self-map of an n-set, in lexicographic order of images.
std::vector<Transformation> all_transformations(std::size_t n);

}  // namespace starfree
