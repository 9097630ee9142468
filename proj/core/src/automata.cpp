#include "starfree/automata.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>

#include "starfree/errors.hpp"

namespace starfree {

bool run_dfa(const Dfa& dfa, const Word& w) {
    return dfa.is_final(dfa.run_from(dfa.initial(), w));
}

bool run_nfa(const Nfa& nfa, const Word& w) {
    w.check_over(nfa.alphabet().size());
    auto current = nfa.epsilon_closure(nfa.initials());
    for (Letter a : w.symbols()) {
        std::vector<State> next;
        for (State q : current) {
            auto succ = nfa.successors(q, a);
            next.insert(next.end(), succ.begin(), succ.end());
        }
        current = nfa.epsilon_closure(next);
        if (current.empty()) {
            return false;
        }
    }
    return std::any_of(current.begin(), current.end(), [&](State q) { return nfa.is_final(q); });
}

namespace {

// Subsets as fixed-width runs of 64-bit words in one pool, indexed by an
// open-addressing table of pool positions.
class SubsetTable {
public:
    explicit SubsetTable(std::size_t width) : width_(width), slots_(64, -1) {}

    std::size_t size() const noexcept { return count_; }
    const std::uint64_t* at(std::size_t index) const noexcept { return pool_.data() + index * width_; }

    // Returns the index of `bits`, inserting it when new.
    std::pair<std::size_t, bool> find_or_insert(const std::uint64_t* bits) {
        if ((count_ + 1) * 2 > slots_.size()) {
            grow();
        }
        std::size_t mask = slots_.size() - 1;
        std::size_t h = hash(bits) & mask;
        while (slots_[h] >= 0) {
            const auto idx = static_cast<std::size_t>(slots_[h]);
            if (std::equal(bits, bits + width_, at(idx))) {
                return {idx, false};
            }
            h = (h + 1) & mask;
        }
        slots_[h] = static_cast<std::int64_t>(count_);
        pool_.insert(pool_.end(), bits, bits + width_);
        return {count_++, true};
    }

private:
    std::size_t hash(const std::uint64_t* bits) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::size_t i = 0; i < width_; ++i) {
            h ^= bits[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
        return static_cast<std::size_t>(h);
    }

    void grow() {
        std::vector<std::int64_t> fresh(slots_.size() * 2, -1);
        const std::size_t mask = fresh.size() - 1;
        for (std::size_t idx = 0; idx < count_; ++idx) {
            std::size_t h = hash(at(idx)) & mask;
            while (fresh[h] >= 0) {
                h = (h + 1) & mask;
            }
            fresh[h] = static_cast<std::int64_t>(idx);
        }
        slots_ = std::move(fresh);
    }

    std::size_t width_;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> pool_;
    std::vector<std::int64_t> slots_;
};

TracedDeterminization subset_construction(const Nfa& nfa, bool trace) {
    const std::size_t n = nfa.state_count();
    const std::size_t k = nfa.alphabet().size();
    if (n == 0) {
        TracedDeterminization out{Dfa::single_state(nfa.alphabet(), false), {}};
        if (trace) {
            out.subsets.emplace_back();
        }
        return out;
    }
    const std::size_t width = (n + 63) / 64;
    auto set_bit = [](std::uint64_t* bits, State q) { bits[q / 64] |= std::uint64_t{1} << (q % 64); };

    std::vector<std::uint64_t> closure(n * width, 0);
    for (State q = 0; q < n; ++q) {
        const State from[] = {q};
        for (State r : nfa.epsilon_closure(from)) {
            set_bit(&closure[q * width], r);
        }
    }
    // step[(q * k + a) * width ...] = ε-closure of the a-successors of q
    std::vector<std::uint64_t> step(n * k * width, 0);
    for (State q = 0; q < n; ++q) {
        for (Letter a = 0; a < k; ++a) {
            auto* row = &step[(q * k + a) * width];
            for (State t : nfa.successors(q, a)) {
                for (std::size_t i = 0; i < width; ++i) {
                    row[i] |= closure[t * width + i];
                }
            }
        }
    }
    std::vector<std::uint64_t> final_mask(width, 0);
    for (State f : nfa.finals()) {
        set_bit(final_mask.data(), f);
    }

    SubsetTable table(width);
    std::vector<std::uint64_t> current(width, 0);
    std::vector<std::uint64_t> image(width, 0);
    for (State q : nfa.initials()) {
        for (std::size_t i = 0; i < width; ++i) {
            current[i] |= closure[q * width + i];
        }
    }
    table.find_or_insert(current.data());

    std::vector<State> delta;
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        std::copy(table.at(idx), table.at(idx) + width, current.begin());
        for (Letter a = 0; a < k; ++a) {
            std::fill(image.begin(), image.end(), 0);
            for (std::size_t w = 0; w < width; ++w) {
                auto bits = current[w];
                while (bits != 0) {
                    const auto q = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                    bits &= bits - 1;
                    const auto* row = &step[(q * k + a) * width];
                    for (std::size_t i = 0; i < width; ++i) {
                        image[i] |= row[i];
                    }
                }
            }
            delta.push_back(static_cast<State>(table.find_or_insert(image.data()).first));
        }
    }

    const std::size_t count = table.size();
    std::vector<bool> finals(count, false);
    std::vector<StateSet> subsets;
    if (trace) {
        subsets.reserve(count);
    }
    for (std::size_t idx = 0; idx < count; ++idx) {
        const auto* bits = table.at(idx);
        for (std::size_t i = 0; i < width; ++i) {
            if ((bits[i] & final_mask[i]) != 0) {
                finals[idx] = true;
                break;
            }
        }
        if (trace) {
            subsets.push_back(StateSet::from_mask_words(std::span<const std::uint64_t>(bits, width)));
        }
    }
    return {Dfa(nfa.alphabet(), count, std::move(delta), 0, std::move(finals)), std::move(subsets)};
}

}  // namespace

Dfa determinize(const Nfa& nfa) {
    return subset_construction(nfa, false).dfa;
}

TracedDeterminization determinize_traced(const Nfa& nfa) {
    return subset_construction(nfa, true);
}

std::vector<State> reachable_states(const Dfa& dfa) {
    std::vector<bool> seen(dfa.state_count(), false);
    std::vector<State> order{dfa.initial()};
    seen[dfa.initial()] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Letter a = 0; a < dfa.letter_count(); ++a) {
            const State t = dfa.next(order[i], a);
            if (!seen[t]) {
                seen[t] = true;
                order.push_back(t);
            }
        }
    }
    return order;
}

Dfa canonical_form(const Dfa& dfa) {
    const auto order = reachable_states(dfa);
    const std::size_t k = dfa.letter_count();
    std::vector<State> renumber(dfa.state_count(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        renumber[order[i]] = static_cast<State>(i);
    }
    std::vector<State> delta(order.size() * k);
    std::vector<bool> finals(order.size(), false);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Letter a = 0; a < k; ++a) {
            delta[i * k + a] = renumber[dfa.next(order[i], a)];
        }
        finals[i] = dfa.is_final(order[i]);
    }
    return Dfa(dfa.alphabet(), order.size(), std::move(delta), 0, std::move(finals));
}

Dfa minimize(const Dfa& dfa) {
    const auto order = reachable_states(dfa);
    const std::size_t n = order.size();
    const std::size_t k = dfa.letter_count();
    std::vector<State> renumber(dfa.state_count(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        renumber[order[i]] = static_cast<State>(i);
    }
    std::vector<State> trans(n * k);
    for (std::size_t i = 0; i < n; ++i) {
        for (Letter a = 0; a < k; ++a) {
            trans[i * k + a] = renumber[dfa.next(order[i], a)];
        }
    }

    // Inverse transitions per letter in CSR form.
    std::vector<std::size_t> inv_start(k * (n + 1), 0);
    std::vector<State> inv(n * k);
    for (Letter a = 0; a < k; ++a) {
        auto* start = &inv_start[a * (n + 1)];
        for (std::size_t q = 0; q < n; ++q) {
            ++start[trans[q * k + a] + 1];
        }
        for (std::size_t q = 0; q < n; ++q) {
            start[q + 1] += start[q];
        }
        std::vector<std::size_t> fill(start, start + n);
        for (std::size_t q = 0; q < n; ++q) {
            inv[a * n + fill[trans[q * k + a]]++] = static_cast<State>(q);
        }
    }

    // Partition: elems grouped by block; block b occupies [first[b], last[b]).
    std::vector<State> elems(n);
    std::vector<std::size_t> loc(n);
    std::vector<std::size_t> block_of(n);
    std::vector<std::size_t> first;
    std::vector<std::size_t> last;
    std::vector<std::size_t> marked;
    {
        std::size_t pos = 0;
        for (int pass = 0; pass < 2; ++pass) {
            const bool want_final = pass == 0;
            const std::size_t begin = pos;
            for (std::size_t q = 0; q < n; ++q) {
                if (dfa.is_final(order[q]) == want_final) {
                    elems[pos] = static_cast<State>(q);
                    loc[q] = pos;
                    block_of[q] = first.size();
                    ++pos;
                }
            }
            if (pos > begin) {
                first.push_back(begin);
                last.push_back(pos);
                marked.push_back(0);
            }
        }
    }

    std::vector<std::pair<std::size_t, Letter>> work;
    std::vector<std::uint8_t> in_work;  // block * k + letter
    auto enqueue = [&](std::size_t b, Letter a) {
        if (in_work.size() < (b + 1) * k) {
            in_work.resize((b + 1) * k, 0);
        }
        if (in_work[b * k + a] == 0) {
            in_work[b * k + a] = 1;
            work.emplace_back(b, a);
        }
    };
    auto block_size = [&](std::size_t b) { return last[b] - first[b]; };
    if (first.size() == 2) {
        const std::size_t smaller = block_size(0) <= block_size(1) ? 0 : 1;
        for (Letter a = 0; a < k; ++a) {
            enqueue(smaller, a);
        }
    }

    std::vector<State> splitter;
    std::vector<std::size_t> touched;
    while (!work.empty()) {
        const auto [b, a] = work.back();
        work.pop_back();
        in_work[b * k + a] = 0;

        splitter.assign(elems.begin() + static_cast<std::ptrdiff_t>(first[b]), elems.begin() + static_cast<std::ptrdiff_t>(last[b]));
        touched.clear();
        const auto* start = &inv_start[a * (n + 1)];
        for (State s : splitter) {
            for (std::size_t i = start[s]; i < start[s + 1]; ++i) {
                const State p = inv[a * n + i];
                const std::size_t c = block_of[p];
                const std::size_t boundary = first[c] + marked[c];
                if (loc[p] < boundary) {
                    continue;
                }
                if (marked[c] == 0) {
                    touched.push_back(c);
                }
                const State other = elems[boundary];
                std::swap(elems[loc[p]], elems[boundary]);
                loc[other] = loc[p];
                loc[p] = boundary;
                ++marked[c];
            }
        }
        for (std::size_t c : touched) {
            if (marked[c] == block_size(c)) {
                marked[c] = 0;
                continue;
            }
            const std::size_t d = first.size();
            first.push_back(first[c]);
            last.push_back(first[c] + marked[c]);
            marked.push_back(0);
            first[c] += marked[c];
            marked[c] = 0;
            for (std::size_t i = first[d]; i < last[d]; ++i) {
                block_of[elems[i]] = d;
            }
            for (Letter x = 0; x < k; ++x) {
                if (in_work.size() > c * k + x && in_work[c * k + x] != 0) {
                    enqueue(d, x);
                } else {
                    enqueue(block_size(d) <= block_size(c) ? d : c, x);
                }
            }
        }
    }

    const std::size_t blocks = first.size();
    std::vector<State> delta(blocks * k);
    std::vector<bool> finals(blocks, false);
    for (std::size_t b = 0; b < blocks; ++b) {
        const State rep = elems[first[b]];
        for (Letter a = 0; a < k; ++a) {
            delta[b * k + a] = static_cast<State>(block_of[trans[rep * k + a]]);
        }
        finals[b] = dfa.is_final(order[rep]);
    }
    const Dfa quotient(dfa.alphabet(), blocks, std::move(delta), static_cast<State>(block_of[0]), std::move(finals));
    return canonical_form(quotient);
}

std::size_t quotient_complexity(const Dfa& dfa) {
    return minimize(dfa).state_count();
}

bool is_isomorphic(const Dfa& a, const Dfa& b) {
    if (a.letter_count() != b.letter_count()) {
        return false;
    }
    const auto ca = canonical_form(a);
    const auto cb = canonical_form(b);
    if (ca.state_count() != cb.state_count()) {
        return false;
    }
    const auto da = ca.delta();
    const auto db = cb.delta();
    return std::equal(da.begin(), da.end(), db.begin(), db.end()) && ca.final_flags() == cb.final_flags();
}

Dfa permute_letters(const Dfa& dfa, std::span<const Letter> permutation) {
    const std::size_t k = dfa.letter_count();
    if (permutation.size() != k) {
        throw InputError("letter permutation has " + std::to_string(permutation.size()) + " entries, expected " +
                         std::to_string(k));
    }
    std::vector<bool> used(k, false);
    for (Letter p : permutation) {
        if (p >= k || used[p]) {
            throw InputError("letter permutation is not a bijection");
        }
        used[p] = true;
    }
    std::vector<State> delta(dfa.state_count() * k);
    for (State q = 0; q < dfa.state_count(); ++q) {
        for (Letter a = 0; a < k; ++a) {
            delta[q * k + a] = dfa.next(q, permutation[a]);
        }
    }
    return Dfa(dfa.alphabet(), dfa.state_count(), std::move(delta), dfa.initial(), dfa.final_flags());
}

Dfa restrict_letters(const Dfa& dfa, std::span<const Letter> keep) {
    for (Letter a : keep) {
        if (a >= dfa.letter_count()) {
            throw InputError("cannot restrict to letter index " + std::to_string(a));
        }
    }
    std::vector<State> delta;
    delta.reserve(dfa.state_count() * keep.size());
    for (State q = 0; q < dfa.state_count(); ++q) {
        for (Letter a : keep) {
            delta.push_back(dfa.next(q, a));
        }
    }
    return Dfa(dfa.alphabet().restricted(keep), dfa.state_count(), std::move(delta), dfa.initial(), dfa.final_flags());
}

}  // namespace starfree
