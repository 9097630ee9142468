#include "starfree/transformation.hpp"

#include <algorithm>

#include "starfree/errors.hpp"

namespace starfree {

Transformation::Transformation(std::vector<State> image) : image_(std::move(image)) {
    for (std::size_t k = 0; k < image_.size(); ++k) {
        if (image_[k] >= image_.size()) {
            throw InputError("transformation entry " + std::to_string(k + 1) + " maps to " +
                             std::to_string(image_[k] + 1) + ", outside 1.." + std::to_string(image_.size()));
        }
    }
}

Transformation Transformation::identity(std::size_t n) {
    std::vector<State> image(n);
    for (std::size_t k = 0; k < n; ++k) {
        image[k] = static_cast<State>(k);
    }
    return Transformation(std::move(image));
}

Transformation Transformation::then(const Transformation& next) const {
    std::vector<State> image(image_.size());
    for (std::size_t k = 0; k < image_.size(); ++k) {
        image[k] = next.image_[image_[k]];
    }
    Transformation out;
    out.image_ = std::move(image);
    return out;
}

bool Transformation::is_identity() const noexcept {
    for (std::size_t k = 0; k < image_.size(); ++k) {
        if (image_[k] != k) {
            return false;
        }
    }
    return true;
}

bool Transformation::is_nondecreasing() const noexcept {
    return std::is_sorted(image_.begin(), image_.end());
}

bool Transformation::is_permutation() const noexcept {
    return range().size() == image_.size();
}

std::vector<State> Transformation::range() const {
    std::vector<State> out = image_;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string Transformation::to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < image_.size(); ++k) {
        if (k > 0) {
            out += ' ';
        }
        out += std::to_string(image_[k] + 1);
    }
    return out + ")";
}

std::size_t TransformationHash::operator()(const Transformation& t) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (State q : t.image()) {
        h ^= q;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Transformation letter_transformation(const Dfa& dfa, Letter letter) {
    if (letter >= dfa.letter_count()) {
        throw InputError("letter index " + std::to_string(letter) + " outside the alphabet");
    }
    std::vector<State> image(dfa.state_count());
    for (State q = 0; q < dfa.state_count(); ++q) {
        image[q] = dfa.next(q, letter);
    }
    return Transformation(std::move(image));
}

Transformation transformation_of_word(const Dfa& dfa, const Word& w) {
    w.check_over(dfa.letter_count());
    std::vector<State> image(dfa.state_count());
    for (State q = 0; q < dfa.state_count(); ++q) {
        image[q] = dfa.run_from(q, w);
    }
    return Transformation(std::move(image));
}

std::vector<Transformation> all_transformations(std::size_t n) {
    std::vector<Transformation> out;
    if (n == 0) {
        return out;
    }
    std::vector<State> image(n, 0);
    while (true) {
        out.emplace_back(image);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (image[i] + 1 < n) {
                ++image[i];
                break;
            }
            image[i] = 0;
            if (i == 0) {
                return out;
            }
        }
    }
}

}  // namespace starfree
