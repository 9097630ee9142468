#include "starfree/lang_ops.hpp"

#include <string>
#include <vector>

#include "starfree/automata.hpp"
#include "starfree/errors.hpp"

namespace starfree {

std::string_view to_string(BooleanOp op) noexcept {
    switch (op) {
        case BooleanOp::Union: return "union";
        case BooleanOp::Intersection: return "intersection";
        case BooleanOp::Difference: return "difference";
        case BooleanOp::SymmetricDifference: return "symmetric_difference";
    }
    return "?";
}

std::string_view to_string(Operation op) noexcept {
    switch (op) {
        case Operation::Complement: return "complement";
        case Operation::Union: return "union";
        case Operation::Intersection: return "intersection";
        case Operation::Difference: return "difference";
        case Operation::SymmetricDifference: return "symmetric_difference";
        case Operation::Concat: return "concat";
        case Operation::Star: return "star";
        case Operation::Reverse: return "reverse";
    }
    return "?";
}

std::optional<Operation> parse_operation(std::string_view name) noexcept {
    if (name == "complement") return Operation::Complement;
    if (name == "union") return Operation::Union;
    if (name == "intersection") return Operation::Intersection;
    if (name == "difference") return Operation::Difference;
    if (name == "symmetric_difference" || name == "symdiff") return Operation::SymmetricDifference;
    if (name == "concat" || name == "product" || name == "concatenation") return Operation::Concat;
    if (name == "star") return Operation::Star;
    if (name == "reverse" || name == "reversal") return Operation::Reverse;
    return std::nullopt;
}

std::size_t arity(Operation op) noexcept {
    switch (op) {
        case Operation::Complement:
        case Operation::Star:
        case Operation::Reverse: return 1;
        default: return 2;
    }
}

std::optional<BooleanOp> as_boolean(Operation op) noexcept {
    switch (op) {
        case Operation::Union: return BooleanOp::Union;
        case Operation::Intersection: return BooleanOp::Intersection;
        case Operation::Difference: return BooleanOp::Difference;
        case Operation::SymmetricDifference: return BooleanOp::SymmetricDifference;
        default: return std::nullopt;
    }
}

bool combine(BooleanOp op, bool in_k, bool in_l) noexcept {
    switch (op) {
        case BooleanOp::Union: return in_k || in_l;
        case BooleanOp::Intersection: return in_k && in_l;
        case BooleanOp::Difference: return in_k && !in_l;
        case BooleanOp::SymmetricDifference: return in_k != in_l;
    }
    return false;
}

namespace {

void require_same_alphabet(const Dfa& k, const Dfa& l) {
    if (!(k.alphabet() == l.alphabet())) {
        throw AlphabetMismatch("operands are over different alphabets (" + std::to_string(k.letter_count()) + " vs " +
                               std::to_string(l.letter_count()) + " letters, or different names/order)");
    }
}

OpResult finish(const Dfa& construction) {
    Dfa minimal = minimize(construction);
    const auto complexity = minimal.state_count();
    return {std::move(minimal), complexity, construction.state_count()};
}

}  // namespace

OpResult complement(const Dfa& dfa) {
    return finish(canonical_form(dfa.complemented()));
}

Dfa direct_product(BooleanOp op, const Dfa& k, const Dfa& l) {
    require_same_alphabet(k, l);
    const std::size_t letters = k.letter_count();
    const std::size_t width = l.state_count();
    std::vector<std::int64_t> index(k.state_count() * width, -1);
    std::vector<std::pair<State, State>> pairs{{k.initial(), l.initial()}};
    index[static_cast<std::size_t>(k.initial()) * width + l.initial()] = 0;
    std::vector<State> delta;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [p, q] = pairs[i];
        for (Letter a = 0; a < letters; ++a) {
            const State np = k.next(p, a);
            const State nq = l.next(q, a);
            auto& slot = index[static_cast<std::size_t>(np) * width + nq];
            if (slot < 0) {
                slot = static_cast<std::int64_t>(pairs.size());
                pairs.emplace_back(np, nq);
            }
            delta.push_back(static_cast<State>(slot));
        }
    }
    std::vector<bool> finals(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        finals[i] = combine(op, k.is_final(pairs[i].first), l.is_final(pairs[i].second));
    }
    return Dfa(k.alphabet(), pairs.size(), std::move(delta), 0, std::move(finals));
}

OpResult boolean_op(BooleanOp op, const Dfa& k, const Dfa& l) {
    return finish(direct_product(op, k, l));
}

Nfa concat_nfa(const Dfa& k, const Dfa& l) {
    require_same_alphabet(k, l);
    const auto m = static_cast<State>(k.state_count());
    std::vector<Nfa::Move> moves;
    for (State q = 0; q < k.state_count(); ++q) {
        for (Letter a = 0; a < k.letter_count(); ++a) {
            moves.push_back({q, a, k.next(q, a)});
        }
        if (k.is_final(q)) {
            moves.push_back({q, kEpsilon, m + l.initial()});
        }
    }
    for (State q = 0; q < l.state_count(); ++q) {
        for (Letter a = 0; a < l.letter_count(); ++a) {
            moves.push_back({m + q, a, m + l.next(q, a)});
        }
    }
    std::vector<State> finals;
    for (State f : l.finals()) {
        finals.push_back(m + f);
    }
    const State initial = k.initial();
    return Nfa(k.alphabet(), k.state_count() + l.state_count(), moves, std::span<const State>(&initial, 1), finals, true);
}

OpResult concat(const Dfa& k, const Dfa& l) {
    return finish(determinize(concat_nfa(k, l)));
}

Nfa star_nfa(const Dfa& dfa) {
    // State 0 is fresh; state q of dfa becomes q + 1.
    std::vector<Nfa::Move> moves;
    for (Letter a = 0; a < dfa.letter_count(); ++a) {
        moves.push_back({0, a, dfa.next(dfa.initial(), a) + 1});
    }
    for (State q = 0; q < dfa.state_count(); ++q) {
        for (Letter a = 0; a < dfa.letter_count(); ++a) {
            moves.push_back({q + 1, a, dfa.next(q, a) + 1});
        }
        if (dfa.is_final(q)) {
            moves.push_back({q + 1, kEpsilon, dfa.initial() + 1});
        }
    }
    std::vector<State> finals{0};
    for (State f : dfa.finals()) {
        finals.push_back(f + 1);
    }
    const State initial = 0;
    return Nfa(dfa.alphabet(), dfa.state_count() + 1, moves, std::span<const State>(&initial, 1), finals, true);
}

OpResult star(const Dfa& dfa) {
    return finish(determinize(star_nfa(dfa)));
}

Nfa reverse_nfa(const Dfa& dfa) {
    std::vector<Nfa::Move> moves;
    for (State q = 0; q < dfa.state_count(); ++q) {
        for (Letter a = 0; a < dfa.letter_count(); ++a) {
            moves.push_back({dfa.next(q, a), a, q});
        }
    }
    const auto initials = dfa.finals();
    const State final_state = dfa.initial();
    return Nfa(dfa.alphabet(), dfa.state_count(), moves, initials, std::span<const State>(&final_state, 1), false);
}

OpResult reverse(const Dfa& dfa) {
    return finish(determinize(reverse_nfa(dfa)));
}

OpResult apply(Operation op, std::span<const Dfa> operands) {
    if (operands.size() != arity(op)) {
        throw InputError(std::string(to_string(op)) + " takes " + std::to_string(arity(op)) + " operand(s), got " +
                         std::to_string(operands.size()));
    }
    if (auto b = as_boolean(op)) {
        return boolean_op(*b, operands[0], operands[1]);
    }
    switch (op) {
        case Operation::Complement: return complement(operands[0]);
        case Operation::Concat: return concat(operands[0], operands[1]);
        case Operation::Star: return star(operands[0]);
        case Operation::Reverse: return reverse(operands[0]);
        default: break;
    }
    throw InputError("unsupported operation");
}

}  // namespace starfree
