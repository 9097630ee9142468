#include "starfree/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "starfree/automata.hpp"
#include "starfree/errors.hpp"
#include "starfree/witnesses.hpp"

namespace starfree {

namespace {

struct ClaimName {
    ClaimId id;
    std::string_view name;
};

constexpr std::array<ClaimName, 16> kClaimNames{{
    {ClaimId::Thm1, "thm1"},
    {ClaimId::Thm2, "thm2"},
    {ClaimId::Cor1, "cor1"},
    {ClaimId::RightIdealN1, "right_ideal_n1"},
    {ClaimId::M2N2Product, "m2n2_product"},
    {ClaimId::Thm3, "thm3"},
    {ClaimId::Thm3M2Gap, "thm3_m2_gap"},
    {ClaimId::Lemma1, "lemma1"},
    {ClaimId::Thm4, "thm4"},
    {ClaimId::Table1, "table1"},
    {ClaimId::Thm5, "thm5"},
    {ClaimId::Thm5N2Cap, "thm5_n2_cap"},
    {ClaimId::Thm6Boolean, "thm6_boolean"},
    {ClaimId::Thm6Product, "thm6_product"},
    {ClaimId::Thm6Star, "thm6_star"},
    {ClaimId::Thm6Reversal, "thm6_reversal"},
}};

std::size_t pow2(std::size_t e) { return std::size_t{1} << e; }

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw ConfigError(message);
    }
}

std::size_t value_or(const std::optional<std::size_t>& v, std::size_t fallback) { return v ? *v : fallback; }

// Everything verify_claim fills in apart from the claim id and timing.
struct Outcome {
    std::vector<std::pair<std::string, std::string>> params;
    std::size_t expected = 0;
    std::string formula;
    std::optional<std::size_t> computed;
    Status status = Status::Fail;
    std::optional<std::size_t> search_space;
    std::string note;

    void param(std::string name, std::size_t value) { params.emplace_back(std::move(name), std::to_string(value)); }
    void param(std::string name, std::string value) { params.emplace_back(std::move(name), std::move(value)); }
    void add_note(const std::string& text) {
        if (!note.empty()) {
            note += "; ";
        }
        note += text;
    }
    void compare() { status = computed && *computed == expected ? Status::Pass : Status::Fail; }
};

// Runs a search and folds it into the outcome. Returns false when over budget.
bool run_search(Outcome& out, Operation op, const EnumerationConfig& k_cfg, const std::optional<EnumerationConfig>& l_cfg,
                std::size_t budget, SearchResult* result_out = nullptr) {
    try {
        auto result = max_operation_complexity(op, k_cfg, l_cfg, budget);
        out.search_space = out.search_space.value_or(0) + result.candidates;
        if (result_out != nullptr) {
            *result_out = std::move(result);
        }
        return true;
    } catch (const ResourceError& e) {
        out.status = Status::Skipped;
        out.add_note(std::string("skipped: budget (") + e.what() + ")");
        return false;
    }
}

EnumerationConfig search_class(std::size_t states, std::size_t letters, TransformationFilter filter) {
    EnumerationConfig cfg;
    cfg.states = states;
    cfg.max_letters = letters;
    cfg.filter = filter;
    return cfg;
}

std::size_t thm6_star_bound(std::size_t n) {
    if (n == 1) {
        return 2;
    }
    if (n <= 5) {
        return n;
    }
    return n * n - 7 * n + 13;
}

Outcome check_thm1(const ClaimParams& p) {
    Outcome out;
    const auto m = value_or(p.m, 4);
    const auto n = value_or(p.n, 5);
    require(m >= 1 && n >= 1, "thm1 needs m, n >= 1");
    std::vector<BooleanOp> ops;
    if (p.op) {
        const auto b = as_boolean(*p.op);
        require(b.has_value(), "thm1 takes a boolean operation");
        ops.push_back(*b);
    } else {
        ops = {BooleanOp::Union, BooleanOp::Intersection, BooleanOp::SymmetricDifference, BooleanOp::Difference};
    }
    out.param("m", m);
    out.param("n", n);
    out.param("op", p.op ? std::string(to_string(*p.op)) : std::string("all"));
    out.expected = m * n;
    out.formula = "mn";
    out.computed = out.expected;
    for (auto op : ops) {
        std::size_t value = 0;
        switch (op) {
            case BooleanOp::Union: {
                const auto [k, l] = union_witnesses(m, n);
                value = boolean_op(op, k, l).complexity;
                break;
            }
            case BooleanOp::Intersection:
            case BooleanOp::SymmetricDifference: {
                const auto [k, l] = intersection_witnesses(m, n);
                value = boolean_op(op, k, l).complexity;
                break;
            }
            case BooleanOp::Difference: {
                // complement(K) \ L = complement(K u L)
                const auto [k, l] = union_witnesses(m, n);
                value = boolean_op(op, k.complemented(), l).complexity;
                break;
            }
        }
        if (ops.size() > 1) {
            out.add_note(std::string(to_string(op)) + "=" + std::to_string(value));
        }
        if (value != out.expected && *out.computed == out.expected) {
            out.computed = value;
        }
    }
    out.compare();
    return out;
}

Outcome check_thm2(const ClaimParams& p) {
    Outcome out;
    const auto m = value_or(p.m, 4);
    const auto n = value_or(p.n, 5);
    require(m >= 1 && n >= 3, "thm2 needs m >= 1 and n >= 3");
    out.param("m", m);
    out.param("n", n);
    out.expected = (m - 1) * pow2(n) + pow2(n - 1);
    out.formula = "(m-1)2^n+2^(n-1)";
    const auto [k, l] = product_witnesses(m, n);
    const auto result = concat(k, l);
    out.computed = result.complexity;
    out.add_note("reachable subsets " + std::to_string(result.construction_states));
    out.compare();
    if (result.construction_states != out.expected) {
        out.status = Status::Fail;
    }
    return out;
}

Outcome check_cor1(const ClaimParams& p) {
    Outcome out;
    const auto n = value_or(p.n, 5);
    require(n >= 1, "cor1 needs n >= 1");
    out.param("n", n);
    out.expected = pow2(n - 1);
    out.formula = "2^(n-1)";
    const Dfa l = n >= 3 ? left_ideal_witness(n) : reversal_witness(n);
    out.computed = concat(Dfa::single_state(l.alphabet(), true), l).complexity;
    out.compare();
    return out;
}

Outcome check_right_ideal(const ClaimParams& p) {
    Outcome out;
    const auto m = value_or(p.m, 5);
    require(m >= 1, "right_ideal_n1 needs m >= 1");
    out.param("m", m);
    out.param("n", 1);
    out.expected = m;
    out.formula = "m";
    const Dfa k = right_ideal_witness(m);
    out.computed = concat(k, Dfa::single_state(k.alphabet(), true)).complexity;
    out.compare();
    return out;
}

// Exhaustive product search over pairs of 2-state aperiodic machines.
// Nine joint letters cover every pair of the three aperiodic 2-state maps.
Outcome check_m2n2(const ClaimParams& p, std::size_t budget, bool gap) {
    Outcome out;
    const auto m = value_or(p.m, 2);
    require(m == 2, std::string(gap ? "thm3_m2_gap" : "m2n2_product") + " is defined for m = 2 only");
    const auto letters = value_or(p.letters, 9);
    require(letters >= 1 && letters <= 9, "joint alphabet size must be in 1..9");
    out.param("m", 2);
    out.param("n", 2);
    out.param("letters", letters);
    out.expected = 4;
    out.formula = gap ? "max < 3m-1 = 5" : "4";
    SearchResult result;
    const auto cfg = search_class(2, letters, TransformationFilter::AperiodicOnly);
    if (!run_search(out, Operation::Concat, cfg, cfg, budget, &result)) {
        return out;
    }
    out.computed = result.maximum;
    out.add_note("search max " + std::to_string(result.maximum) + " over " + std::to_string(result.operands) +
                 " operand pairs");
    out.compare();
    return out;
}

Outcome check_thm3(const ClaimParams& p) {
    Outcome out;
    const auto m = value_or(p.m, 5);
    require(m >= 2, "thm3 needs m >= 2");
    out.param("m", m);
    out.param("n", 2);
    out.expected = 3 * m - 2;
    out.formula = "3m-2";
    const auto [k, l] = product_n2_witnesses(m);
    out.computed = concat(k, l).complexity;
    out.compare();
    return out;
}

Outcome check_lemma1(const ClaimParams& p) {
    Outcome out;
    const auto n = value_or(p.n, 6);
    require(n >= 3, "lemma1 needs n >= 3");
    out.param("n", n);
    out.expected = pow2(n - 1) + pow2(n - 3) - 1;
    out.formula = "2^(n-1)+2^(n-3)-1";
    out.computed = star(star_witness(n, 2)).complexity;
    out.compare();
    return out;
}

Outcome check_thm4(const ClaimParams& p, std::size_t budget) {
    Outcome out;
    const auto n = value_or(p.n, 5);
    require(n >= 1, "thm4 needs n >= 1");
    out.param("n", n);
    if (n <= 2) {
        out.expected = n == 1 ? 2 : 3;
        out.formula = n == 1 ? "kappa(empty*) = 2" : "kappa((b*aS*)*) = 3";
        out.computed = star(star_small_witness(n)).complexity;
        out.compare();
        return out;
    }
    const auto letters = value_or(p.letters, 4);
    require(letters >= 2 && letters <= 4, "thm4 takes 2..4 letters");
    out.param("letters", letters);
    out.expected = *star_bound(letters, n);
    out.formula = letters == 4 ? "2^(n-1)+2^(n-2)" : letters == 3 ? "2^(n-1)+2^(n-2)-1" : "2^(n-1)+2^(n-3)-1";
    out.computed = star(star_witness(n, letters)).complexity;
    out.compare();
    if (n == 3 || n == 4) {
        const auto filter = n == 3 ? TransformationFilter::AperiodicOnly : TransformationFilter::NondecreasingOnly;
        SearchResult result;
        if (!run_search(out, Operation::Star, search_class(n, letters, filter), std::nullopt, budget, &result)) {
            return out;
        }
        out.add_note("witness " + std::to_string(*out.computed) + ", " + std::string(to_string(filter)) +
                     " search max " + std::to_string(result.maximum));
        if (result.maximum != out.expected) {
            out.computed = result.maximum;
            out.status = Status::Fail;
        }
    }
    return out;
}

Outcome check_table1(const ClaimParams& p, std::size_t budget) {
    Outcome out;
    const auto n_min = value_or(p.m, 1);
    const auto n_max = value_or(p.n, 8);
    require(n_min >= 1 && n_min <= n_max, "table1 needs 1 <= from <= to");
    out.param("from", n_min);
    out.param("to", n_max);
    const auto table = star_table(n_min, n_max, true, budget);
    out.expected = table.cells.size();
    out.formula = "all cells";
    std::size_t matching = 0;
    std::size_t skipped = 0;
    for (const auto& cell : table.cells) {
        if (cell.matches()) {
            ++matching;
        } else {
            out.add_note("cell |S|=" + std::to_string(cell.letters) + " n=" + std::to_string(cell.n) + ": " +
                         cell.status());
        }
        if (cell.skipped) {
            ++skipped;
        }
    }
    out.computed = matching;
    out.compare();
    if (skipped > 0 && out.status == Status::Pass) {
        out.add_note(std::to_string(skipped) + " searches skipped: budget");
    }
    return out;
}

Outcome check_thm5(const ClaimParams& p) {
    Outcome out;
    const auto n = value_or(p.n, 5);
    require(n >= 1 && n <= 20, "thm5 needs 1 <= n <= 20");
    out.param("n", n);
    out.expected = pow2(n) - 1;
    out.formula = "2^n-1";
    const Dfa d = reversal_witness(n);
    out.param("letters", d.letter_count());
    out.computed = reverse(d).complexity;
    out.compare();
    return out;
}

Outcome check_thm5_cap(const ClaimParams& p, std::size_t budget) {
    Outcome out;
    const auto letters = value_or(p.letters, 3);
    require(letters >= 1, "thm5_n2_cap needs letters >= 1");
    out.param("n", 2);
    out.param("letters", letters);
    out.expected = 3;
    out.formula = "3";
    SearchResult result;
    if (!run_search(out, Operation::Reverse, search_class(2, letters, TransformationFilter::AperiodicOnly), std::nullopt,
                    budget, &result)) {
        return out;
    }
    out.computed = result.maximum;
    out.compare();
    return out;
}

Outcome check_thm6_boolean(const ClaimParams& p) {
    Outcome out;
    const auto m = value_or(p.m, 5);
    const auto n = value_or(p.n, 7);
    require(m >= 1 && n >= 1, "thm6_boolean needs m, n >= 1");
    std::vector<BooleanOp> ops;
    if (p.op) {
        const auto b = as_boolean(*p.op);
        require(b.has_value(), "thm6_boolean takes a boolean operation");
        ops.push_back(*b);
    } else {
        ops = {BooleanOp::Union, BooleanOp::Intersection, BooleanOp::SymmetricDifference, BooleanOp::Difference};
    }
    out.param("m", m);
    out.param("n", n);
    out.param("op", p.op ? std::string(to_string(*p.op)) : std::string("all"));
    out.expected = std::max(m, n);
    out.formula = "max(m,n)";
    out.computed = out.expected;
    for (auto op : ops) {
        const auto [k, l] = unary_boolean_witnesses(op, m, n);
        const auto value = boolean_op(op, k, l).complexity;
        if (ops.size() > 1) {
            out.add_note(std::string(to_string(op)) + "=" + std::to_string(value));
        }
        if (value != out.expected && *out.computed == out.expected) {
            out.computed = value;
        }
    }
    out.compare();
    return out;
}

Outcome check_thm6_product(const ClaimParams& p) {
    Outcome out;
    const auto m = value_or(p.m, 5);
    const auto n = value_or(p.n, 7);
    require(m >= 1 && n >= 1, "thm6_product needs m, n >= 1");
    out.param("m", m);
    out.param("n", n);
    out.expected = m + n - 1;
    out.formula = "m+n-1";
    const auto [k, l] = unary_product_witnesses(m, n);
    out.computed = concat(k, l).complexity;
    out.compare();
    return out;
}

Outcome check_thm6_star(const ClaimParams& p) {
    Outcome out;
    const auto n = value_or(p.n, 8);
    require(n >= 1, "thm6_star needs n >= 1");
    out.param("n", n);
    out.expected = thm6_star_bound(n);
    out.formula = n == 1 ? "2" : n <= 5 ? "n" : "n^2-7n+13";
    out.computed = star(unary_star_witness(n)).complexity;
    out.compare();
    return out;
}

Outcome check_thm6_reversal(const ClaimParams& p) {
    Outcome out;
    const auto n = value_or(p.n, 8);
    require(n >= 1, "thm6_reversal needs n >= 1");
    out.param("n", n);
    out.expected = n;
    out.formula = "n";
    out.computed = reverse(unary_at_least(n - 1)).complexity;
    out.compare();
    return out;
}

Outcome dispatch(ClaimId id, const ClaimParams& p, std::size_t budget) {
    switch (id) {
        case ClaimId::Thm1: return check_thm1(p);
        case ClaimId::Thm2: return check_thm2(p);
        case ClaimId::Cor1: return check_cor1(p);
        case ClaimId::RightIdealN1: return check_right_ideal(p);
        case ClaimId::M2N2Product: return check_m2n2(p, budget, false);
        case ClaimId::Thm3: return check_thm3(p);
        case ClaimId::Thm3M2Gap: return check_m2n2(p, budget, true);
        case ClaimId::Lemma1: return check_lemma1(p);
        case ClaimId::Thm4: return check_thm4(p, budget);
        case ClaimId::Table1: return check_table1(p, budget);
        case ClaimId::Thm5: return check_thm5(p);
        case ClaimId::Thm5N2Cap: return check_thm5_cap(p, budget);
        case ClaimId::Thm6Boolean: return check_thm6_boolean(p);
        case ClaimId::Thm6Product: return check_thm6_product(p);
        case ClaimId::Thm6Star: return check_thm6_star(p);
        case ClaimId::Thm6Reversal: return check_thm6_reversal(p);
    }
    throw ConfigError("unknown claim");
}

ClaimParams mn(std::optional<std::size_t> m, std::optional<std::size_t> n, std::optional<Operation> op = std::nullopt,
               std::optional<std::size_t> letters = std::nullopt) {
    ClaimParams p;
    p.m = m;
    p.n = n;
    p.op = op;
    p.letters = letters;
    return p;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    return quoted + "\"";
}

std::string joined_params(const VerificationReport& report, std::string_view sep) {
    std::string text;
    for (const auto& [name, value] : report.params) {
        if (!text.empty()) {
            text += sep;
        }
        text += name + "=" + value;
    }
    return text;
}

}  // namespace

std::string_view to_string(ClaimId id) noexcept {
    for (const auto& entry : kClaimNames) {
        if (entry.id == id) {
            return entry.name;
        }
    }
    return "?";
}

std::optional<ClaimId> parse_claim_id(std::string_view name) noexcept {
    for (const auto& entry : kClaimNames) {
        if (entry.name == name) {
            return entry.id;
        }
    }
    return std::nullopt;
}

const std::vector<ClaimId>& all_claim_ids() {
    static const std::vector<ClaimId> ids = [] {
        std::vector<ClaimId> out;
        for (const auto& entry : kClaimNames) {
            out.push_back(entry.id);
        }
        return out;
    }();
    return ids;
}

std::string_view to_string(Status status) noexcept {
    switch (status) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

VerificationReport verify_claim(ClaimId id, const ClaimParams& params, std::size_t budget) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out = dispatch(id, params, budget);
    const auto stop = std::chrono::steady_clock::now();
    VerificationReport report;
    report.claim = id;
    report.params = std::move(out.params);
    report.expected = out.expected;
    report.expected_formula = std::move(out.formula);
    report.computed = out.computed;
    report.status = out.status;
    report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    report.search_space = out.search_space;
    report.note = std::move(out.note);
    return report;
}

std::vector<std::pair<ClaimId, ClaimParams>> claim_runs(bool quick) {
    std::vector<std::pair<ClaimId, ClaimParams>> runs;
    auto add = [&runs](ClaimId id, ClaimParams p) { runs.emplace_back(id, std::move(p)); };
    if (quick) {
        add(ClaimId::Thm1, mn(1, 1));
        add(ClaimId::Thm2, mn(1, 3));
        add(ClaimId::Cor1, mn(std::nullopt, 1));
        add(ClaimId::RightIdealN1, mn(1, std::nullopt));
        add(ClaimId::M2N2Product, mn(2, 2));
        add(ClaimId::Thm3, mn(2, std::nullopt));
        add(ClaimId::Thm3M2Gap, mn(2, 2));
        add(ClaimId::Lemma1, mn(std::nullopt, 3));
        add(ClaimId::Thm4, mn(std::nullopt, 1));
        add(ClaimId::Table1, mn(1, 3));
        add(ClaimId::Thm5, mn(std::nullopt, 1));
        add(ClaimId::Thm5N2Cap, mn(std::nullopt, 2));
        add(ClaimId::Thm6Boolean, mn(1, 1));
        add(ClaimId::Thm6Product, mn(1, 1));
        add(ClaimId::Thm6Star, mn(std::nullopt, 1));
        add(ClaimId::Thm6Reversal, mn(std::nullopt, 1));
        return runs;
    }
    for (std::size_t m = 2; m <= 7; ++m) {
        for (std::size_t n = 2; n <= 7; ++n) {
            add(ClaimId::Thm1, mn(m, n));
        }
    }
    for (std::size_t m = 1; m <= 4; ++m) {
        for (std::size_t n = 3; n <= 6; ++n) {
            add(ClaimId::Thm2, mn(m, n));
        }
    }
    for (std::size_t n = 1; n <= 8; ++n) {
        add(ClaimId::Cor1, mn(std::nullopt, n));
    }
    for (std::size_t m = 1; m <= 8; ++m) {
        add(ClaimId::RightIdealN1, mn(m, std::nullopt));
    }
    add(ClaimId::M2N2Product, mn(2, 2));
    for (std::size_t m = 2; m <= 8; ++m) {
        add(ClaimId::Thm3, mn(m, std::nullopt));
    }
    add(ClaimId::Thm3M2Gap, mn(2, 2));
    for (std::size_t n = 3; n <= 8; ++n) {
        add(ClaimId::Lemma1, mn(std::nullopt, n));
    }
    add(ClaimId::Thm4, mn(std::nullopt, 1));
    add(ClaimId::Thm4, mn(std::nullopt, 2));
    for (std::size_t n = 3; n <= 8; ++n) {
        for (std::size_t k = 2; k <= 4; ++k) {
            add(ClaimId::Thm4, mn(std::nullopt, n, std::nullopt, k));
        }
    }
    add(ClaimId::Table1, mn(1, 8));
    for (std::size_t n = 1; n <= 7; ++n) {
        add(ClaimId::Thm5, mn(std::nullopt, n));
    }
    add(ClaimId::Thm5N2Cap, mn(std::nullopt, 2));
    for (std::size_t m = 1; m <= 8; ++m) {
        for (std::size_t n = 1; n <= 8; ++n) {
            add(ClaimId::Thm6Boolean, mn(m, n));
        }
    }
    for (std::size_t m = 1; m <= 8; ++m) {
        for (std::size_t n = 1; n <= 8; ++n) {
            add(ClaimId::Thm6Product, mn(m, n));
        }
    }
    for (std::size_t n = 1; n <= 8; ++n) {
        add(ClaimId::Thm6Star, mn(std::nullopt, n));
        add(ClaimId::Thm6Reversal, mn(std::nullopt, n));
    }
    return runs;
}

std::optional<std::size_t> star_bound(std::size_t letters, std::size_t n) noexcept {
    if (letters == 0 || letters > 4 || n == 0) {
        return std::nullopt;
    }
    if (letters == 1) {
        return thm6_star_bound(n);
    }
    if (n == 1 || (n == 2 && letters > 2)) {
        return std::nullopt;
    }
    if (n == 2) {
        return 3;
    }
    if (n >= 8 * sizeof(std::size_t) - 1) {
        return std::nullopt;
    }
    switch (letters) {
        case 2: return pow2(n - 1) + pow2(n - 3) - 1;
        case 3: return pow2(n - 1) + pow2(n - 2) - 1;
        default: return pow2(n - 1) + pow2(n - 2);
    }
}

bool star_bound_proven_tight(std::size_t letters, std::size_t n) noexcept {
    if (!star_bound(letters, n)) {
        return false;
    }
    switch (letters) {
        case 1: return true;
        case 2: return n <= 3;
        case 3: return n == 3;
        default: return true;
    }
}

bool StarTableCell::matches() const noexcept {
    if (!achieved || *achieved != expected) {
        return false;
    }
    return !search_max || *search_max == expected;
}

std::string StarTableCell::status() const {
    if (!matches()) {
        return "mismatch";
    }
    if (search_max) {
        return proven_tight ? "tight (" + search_class + " search)" : "maximum within the " + search_class + " class";
    }
    if (skipped) {
        return "achieved, search skipped: budget";
    }
    return proven_tight ? "achieved" : "achieved, tightness unproven";
}

const StarTableCell* StarTable::find(std::size_t letters, std::size_t n) const noexcept {
    for (const auto& cell : cells) {
        if (cell.letters == letters && cell.n == n) {
            return &cell;
        }
    }
    return nullptr;
}

StarTable star_table(std::size_t n_min, std::size_t n_max, bool search, std::size_t budget) {
    require(n_min >= 1 && n_min <= n_max, "star table needs 1 <= from <= to");
    require(n_max <= 12, "star table supports n <= 12");
    StarTable table;
    table.n_min = n_min;
    table.n_max = n_max;
    for (std::size_t letters = 1; letters <= 4; ++letters) {
        for (std::size_t n = n_min; n <= n_max; ++n) {
            const auto bound = star_bound(letters, n);
            if (!bound) {
                continue;
            }
            StarTableCell cell;
            cell.letters = letters;
            cell.n = n;
            cell.expected = *bound;
            cell.proven_tight = star_bound_proven_tight(letters, n);
            if (letters == 1) {
                cell.achieved = star(unary_star_witness(n)).complexity;
            } else if (n == 2) {
                cell.achieved = star(star_small_witness(2)).complexity;
            } else {
                cell.achieved = star(star_witness(n, letters)).complexity;
            }
            std::optional<TransformationFilter> filter;
            if (n <= 3 || (n == 4 && letters == 1)) {
                filter = TransformationFilter::AperiodicOnly;
            } else if (n == 4) {
                filter = TransformationFilter::NondecreasingOnly;
            }
            if (search && filter) {
                try {
                    cell.search_max =
                        max_operation_complexity(Operation::Star, search_class(n, letters, *filter), std::nullopt, budget)
                            .maximum;
                    cell.search_class = std::string(to_string(*filter));
                } catch (const ResourceError&) {
                    cell.skipped = true;
                }
            }
            table.cells.push_back(std::move(cell));
        }
    }
    return table;
}

std::string format_star_table(const StarTable& table) {
    std::ostringstream out;
    out << std::setw(8) << "n";
    for (std::size_t n = table.n_min; n <= table.n_max; ++n) {
        out << std::setw(6) << n;
    }
    out << '\n';
    for (std::size_t letters = 1; letters <= 4; ++letters) {
        out << std::setw(8) << ("|S|=" + std::to_string(letters));
        for (std::size_t n = table.n_min; n <= table.n_max; ++n) {
            const auto* cell = table.find(letters, n);
            std::string text = "-";
            if (cell != nullptr) {
                text = cell->achieved ? std::to_string(*cell->achieved) : "?";
                if (cell->proven_tight) {
                    text += "*";
                }
                if (!cell->matches()) {
                    text += "!";
                }
            }
            out << std::setw(6) << text;
        }
        out << '\n';
    }
    out << "* proven tight, ! differs from the expected value\n";
    for (const auto& cell : table.cells) {
        out << "  |S|=" << cell.letters << " n=" << cell.n << ": expected " << cell.expected << ", achieved "
            << (cell.achieved ? std::to_string(*cell.achieved) : std::string("?"));
        if (cell.search_max) {
            out << ", " << cell.search_class << " search max " << *cell.search_max;
        }
        out << " -- " << cell.status() << '\n';
    }
    return out.str();
}

std::string format_report(const VerificationReport& report) {
    std::ostringstream out;
    out << to_string(report.claim);
    if (!report.params.empty()) {
        out << ' ' << joined_params(report, " ");
    }
    out << ": expected " << report.expected << " (" << report.expected_formula << "), computed ";
    out << (report.computed ? std::to_string(*report.computed) : std::string("-"));
    out << " -> " << to_string(report.status);
    out << " [" << std::fixed << std::setprecision(1) << report.elapsed_ms << " ms";
    if (report.search_space) {
        out << ", " << *report.search_space << " candidates";
    }
    out << ']';
    if (!report.note.empty()) {
        out << " (" << report.note << ')';
    }
    return out.str();
}

std::string csv_header() { return "claim,params,expected,computed,status,elapsed_ms"; }

std::string to_csv_row(const VerificationReport& report) {
    std::ostringstream out;
    out << to_string(report.claim) << ',' << csv_field(joined_params(report, ";")) << ',' << report.expected << ','
        << (report.computed ? std::to_string(*report.computed) : std::string()) << ',' << to_string(report.status) << ','
        << std::fixed << std::setprecision(3) << report.elapsed_ms;
    return out.str();
}

}  // namespace starfree
