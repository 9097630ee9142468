#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "starfree/dfa.hpp"
#include "starfree/lang_ops.hpp"
#include "starfree/transformation.hpp"

namespace starfree {

enum class TransformationFilter { All, AperiodicOnly, NondecreasingOnly };

std::string_view to_string(TransformationFilter filter) noexcept;
/// Accepts "all", "aperiodic", "aperiodic-only", "nondecreasing", "nondecreasing-only".
std::optional<TransformationFilter> parse_filter(std::string_view name) noexcept;

/// Small-DFA search class.
///
/// A machine is identified by the set of distinct letter maps it uses
/// (1 to max_letters of them), its final states, and initial state 0.
/// Repeated letters never change the complexity of any operation here, so
/// the set is enough. With `dedupe` off, ordered letter tuples with
/// repetition are enumerated instead (used as a cross-check).
struct EnumerationConfig {
    std::size_t states = 2;
    std::size_t max_letters = 2;
    TransformationFilter filter = TransformationFilter::AperiodicOnly;
    bool dedupe = true;
};

inline constexpr std::size_t kDefaultSearchBudget = 10'000'000;

/// kDefaultSearchBudget, or the value of STARFREE_BUDGET when set to a positive integer.
std::size_t search_budget_from_env();

/// Letter maps a machine in this class may use, in lexicographic order.
/// AperiodicOnly keeps maps whose own powers stabilize; whole machines are
/// checked again during enumeration.
std::vector<Transformation> letter_pool(std::size_t states, TransformationFilter filter);

/// Number of raw candidates (letter choices times final-state choices).
std::size_t candidate_count(const EnumerationConfig& cfg);

/// Visits every initially connected machine of the class; with AperiodicOnly
/// every visited machine passes is_aperiodic. Letters are named a, b, c, ...
/// Throws ResourceError before starting if candidate_count exceeds `budget`.
/// Returns the number of machines visited.
std::size_t enumerate_dfas(const EnumerationConfig& cfg, const std::function<void(const Dfa&)>& visit,
                           std::size_t budget = search_budget_from_env());

/// Number of pair candidates for enumerate_dfa_pairs.
std::size_t pair_candidate_count(const EnumerationConfig& k_cfg, const EnumerationConfig& l_cfg);

/// Operand pairs over a shared alphabet. A letter is a pair of maps (one per
/// operand); the search ranges over sets of 1..k_cfg.max_letters such pairs
/// and over both operands' final sets. Each operand must be initially
/// connected and belong to its own class.
std::size_t enumerate_dfa_pairs(const EnumerationConfig& k_cfg, const EnumerationConfig& l_cfg,
                                 const std::function<void(const Dfa&, const Dfa&)>& visit,
                                 std::size_t budget = search_budget_from_env());

struct SearchResult {
    std::size_t maximum = 0;
    std::optional<Dfa> witness_k;  // first maximizing operand(s) in enumeration order
    std::optional<Dfa> witness_l;
    std::size_t candidates = 0;  // raw candidate count of the search space
    std::size_t operands = 0;    // machines (or pairs) with the exact target complexity
};

/// Exact maximum of κ(op(K, L)) (or κ(op(L)) for unary operations) over all
/// machines of the class(es) whose complexity equals their state count.
/// Binary operations need `l_cfg`.
SearchResult max_operation_complexity(Operation op, const EnumerationConfig& k_cfg,
                                      const std::optional<EnumerationConfig>& l_cfg = std::nullopt,
                                      std::size_t budget = search_budget_from_env());

}  // namespace starfree
