#include "starfree/enumeration.hpp"

#include <cstdlib>
#include <limits>
#include <string>
#include <unordered_map>

#include "starfree/aperiodicity.hpp"
#include "starfree/automata.hpp"
#include "starfree/errors.hpp"

namespace starfree {

std::string_view to_string(TransformationFilter filter) noexcept {
    switch (filter) {
        case TransformationFilter::All: return "all";
        case TransformationFilter::AperiodicOnly: return "aperiodic";
        case TransformationFilter::NondecreasingOnly: return "nondecreasing";
    }
    return "?";
}

std::optional<TransformationFilter> parse_filter(std::string_view name) noexcept {
    if (name == "all") return TransformationFilter::All;
    if (name == "aperiodic" || name == "aperiodic-only") return TransformationFilter::AperiodicOnly;
    if (name == "nondecreasing" || name == "nondecreasing-only") return TransformationFilter::NondecreasingOnly;
    return std::nullopt;
}

std::size_t search_budget_from_env() {
    if (const char* raw = std::getenv("STARFREE_BUDGET")) {
        char* end = nullptr;
        const auto value = std::strtoull(raw, &end, 10);
        if (end != raw && *end == '\0' && value > 0) {
            return static_cast<std::size_t>(value);
        }
    }
    return kDefaultSearchBudget;
}

std::vector<Transformation> letter_pool(std::size_t states, TransformationFilter filter) {
    std::vector<Transformation> pool;
    for (auto& t : all_transformations(states)) {
        const bool keep = filter == TransformationFilter::All ||
                          (filter == TransformationFilter::AperiodicOnly && is_aperiodic_transformation(t)) ||
                          (filter == TransformationFilter::NondecreasingOnly && t.is_nondecreasing());
        if (keep) {
            pool.push_back(std::move(t));
        }
    }
    return pool;
}

namespace {

constexpr auto kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_mul(std::size_t a, std::size_t b) {
    if (a != 0 && b > kSaturated / a) {
        return kSaturated;
    }
    return a * b;
}

std::size_t sat_add(std::size_t a, std::size_t b) {
    return a > kSaturated - b ? kSaturated : a + b;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    std::size_t result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i stays integral at every step
        const std::size_t num = n - k + i;
        if (result > kSaturated / num) {
            return kSaturated;
        }
        result = result * num / i;
    }
    return result;
}

std::size_t letter_choice_count(std::size_t pool, std::size_t max_letters, bool dedupe) {
    std::size_t total = 0;
    std::size_t power = 1;
    for (std::size_t s = 1; s <= max_letters; ++s) {
        if (dedupe) {
            total = sat_add(total, binomial(pool, s));
        } else {
            power = sat_mul(power, pool);
            total = sat_add(total, power);
        }
    }
    return total;
}

std::size_t final_choice_count(std::size_t states) {
    return states >= 63 ? kSaturated : std::size_t{1} << states;
}

// Calls visit(choice) for every set (or tuple) of 1..max_letters pool indices,
// sets in lexicographic order within each size, sizes ascending.
template <typename Visit>
void for_each_letter_choice(std::size_t pool, std::size_t max_letters, bool dedupe, Visit&& visit) {
    for (std::size_t size = 1; size <= max_letters; ++size) {
        if (dedupe && size > pool) {
            break;
        }
        std::vector<std::size_t> choice(size);
        for (std::size_t i = 0; i < size; ++i) {
            choice[i] = dedupe ? i : 0;
        }
        while (true) {
            visit(choice);
            // advance
            std::size_t i = size;
            bool advanced = false;
            while (i > 0) {
                --i;
                const std::size_t limit = dedupe ? pool - (size - i) : pool - 1;
                if (choice[i] < limit) {
                    ++choice[i];
                    for (std::size_t j = i + 1; j < size; ++j) {
                        choice[j] = dedupe ? choice[j - 1] + 1 : 0;
                    }
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                break;
            }
        }
    }
}

bool initially_connected(std::size_t states, const std::vector<State>& delta, std::size_t letters) {
    std::vector<bool> seen(states, false);
    std::vector<State> queue{0};
    seen[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (std::size_t a = 0; a < letters; ++a) {
            const State t = delta[queue[i] * letters + a];
            if (!seen[t]) {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    return queue.size() == states;
}

std::vector<State> table_for(const std::vector<const Transformation*>& letters, std::size_t states) {
    std::vector<State> delta(states * letters.size());
    for (State q = 0; q < states; ++q) {
        for (std::size_t a = 0; a < letters.size(); ++a) {
            delta[q * letters.size() + a] = (*letters[a])(q);
        }
    }
    return delta;
}

std::vector<bool> finals_from_mask(std::size_t states, std::size_t mask) {
    std::vector<bool> finals(states);
    for (std::size_t q = 0; q < states; ++q) {
        finals[q] = ((mask >> q) & 1U) != 0;
    }
    return finals;
}

// Whether a letter table belongs to the configured class (beyond the pool filter).
class ClassCheck {
public:
    ClassCheck(std::size_t states, TransformationFilter filter) : states_(states), filter_(filter) {}

    bool operator()(const std::vector<State>& delta, std::size_t letters) {
        if (!initially_connected(states_, delta, letters)) {
            return false;
        }
        if (filter_ != TransformationFilter::AperiodicOnly) {
            return true;
        }
        auto it = cache_.find(delta);
        if (it != cache_.end()) {
            return it->second;
        }
        const Dfa probe(Alphabet::first_letters(letters), states_, delta, 0, std::vector<bool>(states_, false));
        const bool ok = is_aperiodic(probe).aperiodic;
        cache_.emplace(delta, ok);
        return ok;
    }

private:
    struct VecHash {
        std::size_t operator()(const std::vector<State>& v) const noexcept {
            std::size_t h = 1469598103934665603ULL;
            for (State x : v) {
                h = (h ^ x) * 1099511628211ULL;
            }
            return h;
        }
    };
    std::size_t states_;
    TransformationFilter filter_;
    std::unordered_map<std::vector<State>, bool, VecHash> cache_;
};

void check_config(const EnumerationConfig& cfg) {
    if (cfg.states == 0) {
        throw ConfigError("enumeration needs at least one state");
    }
    if (cfg.max_letters == 0) {
        throw ConfigError("enumeration needs at least one letter");
    }
    if (cfg.states > 8) {
        throw ConfigError("enumeration supports at most 8 states");
    }
}

void check_budget(std::size_t candidates, std::size_t budget, const std::string& what) {
    if (candidates > budget) {
        throw ResourceError(what + ": " + (candidates == kSaturated ? std::string("too many") : std::to_string(candidates)) +
                            " candidates exceed the budget of " + std::to_string(budget));
    }
}

std::string describe(const EnumerationConfig& cfg) {
    return std::to_string(cfg.states) + "-state " + std::string(to_string(cfg.filter)) + " machines with up to " +
           std::to_string(cfg.max_letters) + " letters";
}

}  // namespace

std::size_t candidate_count(const EnumerationConfig& cfg) {
    const auto pool = letter_pool(cfg.states, cfg.filter).size();
    return sat_mul(letter_choice_count(pool, cfg.max_letters, cfg.dedupe), final_choice_count(cfg.states));
}

std::size_t enumerate_dfas(const EnumerationConfig& cfg, const std::function<void(const Dfa&)>& visit, std::size_t budget) {
    check_config(cfg);
    const auto pool = letter_pool(cfg.states, cfg.filter);
    check_budget(sat_mul(letter_choice_count(pool.size(), cfg.max_letters, cfg.dedupe), final_choice_count(cfg.states)),
                 budget, describe(cfg));
    ClassCheck in_class(cfg.states, cfg.filter);
    std::size_t visited = 0;
    std::vector<const Transformation*> letters;
    for_each_letter_choice(pool.size(), cfg.max_letters, cfg.dedupe, [&](const std::vector<std::size_t>& choice) {
        letters.clear();
        for (auto idx : choice) {
            letters.push_back(&pool[idx]);
        }
        const auto delta = table_for(letters, cfg.states);
        if (!in_class(delta, letters.size())) {
            return;
        }
        const Alphabet alphabet = Alphabet::first_letters(letters.size());
        for (std::size_t mask = 0; mask < final_choice_count(cfg.states); ++mask) {
            visit(Dfa(alphabet, cfg.states, delta, 0, finals_from_mask(cfg.states, mask)));
            ++visited;
        }
    });
    return visited;
}

std::size_t pair_candidate_count(const EnumerationConfig& k_cfg, const EnumerationConfig& l_cfg) {
    const auto joint = sat_mul(letter_pool(k_cfg.states, k_cfg.filter).size(), letter_pool(l_cfg.states, l_cfg.filter).size());
    return sat_mul(sat_mul(letter_choice_count(joint, k_cfg.max_letters, k_cfg.dedupe), final_choice_count(k_cfg.states)),
                   final_choice_count(l_cfg.states));
}

std::size_t enumerate_dfa_pairs(const EnumerationConfig& k_cfg, const EnumerationConfig& l_cfg,
                                const std::function<void(const Dfa&, const Dfa&)>& visit, std::size_t budget) {
    check_config(k_cfg);
    check_config(l_cfg);
    const auto pool_k = letter_pool(k_cfg.states, k_cfg.filter);
    const auto pool_l = letter_pool(l_cfg.states, l_cfg.filter);
    const std::size_t joint = pool_k.size() * pool_l.size();
    check_budget(pair_candidate_count(k_cfg, l_cfg), budget, "pairs of " + describe(k_cfg) + " and " + describe(l_cfg));

    ClassCheck k_class(k_cfg.states, k_cfg.filter);
    ClassCheck l_class(l_cfg.states, l_cfg.filter);
    std::size_t visited = 0;
    std::vector<const Transformation*> k_letters;
    std::vector<const Transformation*> l_letters;
    std::vector<Dfa> k_machines;
    std::vector<Dfa> l_machines;
    for_each_letter_choice(joint, k_cfg.max_letters, k_cfg.dedupe, [&](const std::vector<std::size_t>& choice) {
        k_letters.clear();
        l_letters.clear();
        for (auto idx : choice) {
            k_letters.push_back(&pool_k[idx / pool_l.size()]);
            l_letters.push_back(&pool_l[idx % pool_l.size()]);
        }
        const auto k_delta = table_for(k_letters, k_cfg.states);
        if (!k_class(k_delta, choice.size())) {
            return;
        }
        const auto l_delta = table_for(l_letters, l_cfg.states);
        if (!l_class(l_delta, choice.size())) {
            return;
        }
        const Alphabet alphabet = Alphabet::first_letters(choice.size());
        k_machines.clear();
        l_machines.clear();
        for (std::size_t mask = 0; mask < final_choice_count(k_cfg.states); ++mask) {
            k_machines.emplace_back(alphabet, k_cfg.states, k_delta, 0, finals_from_mask(k_cfg.states, mask));
        }
        for (std::size_t mask = 0; mask < final_choice_count(l_cfg.states); ++mask) {
            l_machines.emplace_back(alphabet, l_cfg.states, l_delta, 0, finals_from_mask(l_cfg.states, mask));
        }
        for (const auto& k : k_machines) {
            for (const auto& l : l_machines) {
                visit(k, l);
                ++visited;
            }
        }
    });
    return visited;
}

SearchResult max_operation_complexity(Operation op, const EnumerationConfig& k_cfg,
                                      const std::optional<EnumerationConfig>& l_cfg, std::size_t budget) {
    SearchResult result;
    auto record = [&](std::size_t value, const Dfa& k, const Dfa* l) {
        ++result.operands;
        if (value > result.maximum || !result.witness_k) {
            result.maximum = value;
            result.witness_k = k;
            if (l != nullptr) {
                result.witness_l = *l;
            }
        }
    };
    if (arity(op) == 1) {
        result.candidates = candidate_count(k_cfg);
        enumerate_dfas(
            k_cfg,
            [&](const Dfa& d) {
                if (quotient_complexity(d) != k_cfg.states) {
                    return;
                }
                const Dfa operands[] = {d};
                record(apply(op, operands).complexity, d, nullptr);
            },
            budget);
        return result;
    }
    if (!l_cfg) {
        throw ConfigError(std::string(to_string(op)) + " search needs a second operand class");
    }
    result.candidates = pair_candidate_count(k_cfg, *l_cfg);
    // Minimality of each operand only depends on the operand itself; remember
    // the last verdicts since the inner loop revisits the same K many times.
    const Dfa* last_k = nullptr;
    bool last_k_minimal = false;
    enumerate_dfa_pairs(
        k_cfg, *l_cfg,
        [&](const Dfa& k, const Dfa& l) {
            if (&k != last_k) {
                last_k = &k;
                last_k_minimal = quotient_complexity(k) == k_cfg.states;
            }
            if (!last_k_minimal || quotient_complexity(l) != l_cfg->states) {
                return;
            }
            const Dfa operands[] = {k, l};
            record(apply(op, operands).complexity, k, &l);
        },
        budget);
    return result;
}

}  // namespace starfree
