#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starfree/enumeration.hpp"
#include "starfree/lang_ops.hpp"

namespace starfree {

enum class ClaimId {
    Thm1, Thm2, Cor1, RightIdealN1, M2N2Product, Thm3, Thm3M2Gap, Lemma1, Thm4, Table1, Thm5, Thm5N2Cap,
    Thm6Boolean, Thm6Product, Thm6Star, Thm6Reversal,
};

std::string_view to_string(ClaimId id) noexcept;
std::optional<ClaimId> parse_claim_id(std::string_view name) noexcept;
const std::vector<ClaimId>& all_claim_ids();

struct ClaimParams {
    std::optional<std::size_t> m;
    std::optional<std::size_t> n;
    std::optional<std::size_t> letters;
    std::optional<Operation> op;
};

enum class Status { Pass, Fail, Skipped };
std::string_view to_string(Status status) noexcept;

struct VerificationReport {
    ClaimId claim;
    std::vector<std::pair<std::string, std::string>> params;
    std::size_t expected = 0;
    std::string expected_formula;
    std::optional<std::size_t> computed;
    Status status = Status::Fail;
    double elapsed_ms = 0.0;
    std::optional<std::size_t> search_space;
    std::string note;
};

/// Runs one claim's witness pipeline and/or exhaustive search.
///
/// Missing parameters take each claim's default. Out-of-range parameters
/// throw ConfigError; a search over budget yields Status::Skipped.
VerificationReport verify_claim(ClaimId id, const ClaimParams& params = {},
                                std::size_t budget = search_budget_from_env());

/// Parameter sets for `verify all`: the smallest in-range parameters when
/// `quick`, otherwise a desk-scale sweep.
std::vector<std::pair<ClaimId, ClaimParams>> claim_runs(bool quick);

/// κ(L*) bound for a star-free L with κ(L) = n over `letters` letters, or
/// nullopt for cells with no entry (n = 1 beyond one letter, n = 2 beyond two letters).
std::optional<std::size_t> star_bound(std::size_t letters, std::size_t n) noexcept;
/// Whether the bound above is known to be tight.
bool star_bound_proven_tight(std::size_t letters, std::size_t n) noexcept;

struct StarTableCell {
    std::size_t letters = 0;
    std::size_t n = 0;
    std::size_t expected = 0;
    bool proven_tight = false;
    std::optional<std::size_t> achieved;    // κ(L*) of the family witness
    std::optional<std::size_t> search_max;  // exhaustive maximum, when searched
    std::string search_class;               // "aperiodic" or "nondecreasing" when searched
    bool skipped = false;                   // search exceeded the budget
    bool matches() const noexcept;
    std::string status() const;
};

struct StarTable {
    std::size_t n_min = 1;
    std::size_t n_max = 8;
    std::vector<StarTableCell> cells;  // by letters (1..4), then n
    const StarTableCell* find(std::size_t letters, std::size_t n) const noexcept;
};

/// Star complexities for one to four letters and n in [n_min, n_max].
/// With `search`, cells at n <= 4 are also checked exhaustively: the
/// aperiodic class for n <= 3 and unary n = 4, the non-decreasing class for
/// n = 4 with 2..4 letters.
StarTable star_table(std::size_t n_min, std::size_t n_max, bool search = true,
                     std::size_t budget = search_budget_from_env());

std::string format_star_table(const StarTable& table);
std::string format_report(const VerificationReport& report);
std::string csv_header();
std::string to_csv_row(const VerificationReport& report);

}  // namespace starfree
