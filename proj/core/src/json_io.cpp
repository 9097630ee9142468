#include "starfree/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "starfree/automata.hpp"
#include "starfree/errors.hpp"

namespace starfree {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& problem) {
    throw InputError(path + ": " + problem);
}

const json& field(const json& obj, const char* key) {
    if (!obj.contains(key)) {
        fail(std::string("$.") + key, "missing field");
    }
    return obj.at(key);
}

std::size_t read_count(const json& value, const std::string& path) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        fail(path, "expected a non-negative integer");
    }
    return value.get<std::size_t>();
}

// 1-based state in the file -> 0-based State.
State read_state(const json& value, const std::string& path, std::size_t state_count) {
    if (!value.is_number_integer()) {
        fail(path, "expected a state number");
    }
    const auto raw = value.get<long long>();
    if (raw < 1 || static_cast<std::size_t>(raw) > state_count) {
        fail(path, "state " + std::to_string(raw) + " out of range 1.." + std::to_string(state_count));
    }
    return static_cast<State>(raw - 1);
}

std::vector<State> read_state_list(const json& value, const std::string& path, std::size_t state_count) {
    if (!value.is_array()) {
        fail(path, "expected an array of states");
    }
    std::vector<State> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(read_state(value[i], path + "[" + std::to_string(i) + "]", state_count));
    }
    return out;
}

Alphabet read_alphabet(const json& doc) {
    const auto& value = field(doc, "alphabet");
    if (!value.is_array() || value.empty()) {
        fail("$.alphabet", "expected a non-empty array of letter names");
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < value.size(); ++i) {
        if (!value[i].is_string() || value[i].get<std::string>().empty()) {
            fail("$.alphabet[" + std::to_string(i) + "]", "expected a non-empty string");
        }
        names.push_back(value[i].get<std::string>());
    }
    try {
        return Alphabet(std::move(names));
    } catch (const InputError& e) {
        fail("$.alphabet", e.what());
    }
}

Dfa read_dfa(const json& doc) {
    Alphabet alphabet = read_alphabet(doc);
    const std::size_t n = read_count(field(doc, "states"), "$.states");
    if (n == 0) {
        fail("$.states", "a DFA needs at least one state");
    }
    const State initial = read_state(field(doc, "initial"), "$.initial", n);
    const auto finals = read_state_list(field(doc, "finals"), "$.finals", n);
    const auto& rows = field(doc, "delta");
    if (!rows.is_array() || rows.size() != n) {
        fail("$.delta", "expected " + std::to_string(n) + " rows");
    }
    std::vector<State> delta;
    delta.reserve(n * alphabet.size());
    for (std::size_t q = 0; q < n; ++q) {
        const std::string row_path = "$.delta[" + std::to_string(q) + "]";
        if (!rows[q].is_array() || rows[q].size() != alphabet.size()) {
            fail(row_path, "expected " + std::to_string(alphabet.size()) + " entries");
        }
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            delta.push_back(read_state(rows[q][a], row_path + "[" + std::to_string(a) + "]", n));
        }
    }
    return Dfa(std::move(alphabet), n, std::move(delta), initial, finals);
}

Nfa read_nfa(const json& doc) {
    Alphabet alphabet = read_alphabet(doc);
    if (alphabet.index_of("eps")) {
        fail("$.alphabet", "\"eps\" is reserved for ε-moves");
    }
    const std::size_t n = read_count(field(doc, "states"), "$.states");
    const auto initials = read_state_list(field(doc, "initials"), "$.initials", n);
    const auto finals = read_state_list(field(doc, "finals"), "$.finals", n);
    const auto& moves_json = field(doc, "moves");
    if (!moves_json.is_array()) {
        fail("$.moves", "expected an array");
    }
    std::vector<Nfa::Move> moves;
    bool epsilon = false;
    for (std::size_t i = 0; i < moves_json.size(); ++i) {
        const std::string path = "$.moves[" + std::to_string(i) + "]";
        const auto& m = moves_json[i];
        if (!m.is_object()) {
            fail(path, "expected an object");
        }
        if (!m.contains("from")) {
            fail(path + ".from", "missing field");
        }
        if (!m.contains("on")) {
            fail(path + ".on", "missing field");
        }
        if (!m.contains("to")) {
            fail(path + ".to", "missing field");
        }
        const State from = read_state(m.at("from"), path + ".from", n);
        if (!m.at("on").is_string()) {
            fail(path + ".on", "expected a letter name or \"eps\"");
        }
        const auto on_name = m.at("on").get<std::string>();
        Letter on = kEpsilon;
        if (on_name == "eps") {
            epsilon = true;
        } else {
            auto letter = alphabet.index_of(on_name);
            if (!letter) {
                fail(path + ".on", "'" + on_name + "' is not in the alphabet");
            }
            on = *letter;
        }
        for (State to : read_state_list(m.at("to"), path + ".to", n)) {
            moves.push_back({from, on, to});
        }
    }
    return Nfa(std::move(alphabet), n, moves, initials, finals, epsilon);
}

json alphabet_json(const Alphabet& alphabet) {
    json out = json::array();
    for (const auto& name : alphabet.letters()) {
        out.push_back(name);
    }
    return out;
}

json one_based(const std::vector<State>& states) {
    json out = json::array();
    for (State q : states) {
        out.push_back(q + 1);
    }
    return out;
}

}  // namespace

Automaton parse_automaton(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail("$", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        fail("$", "expected an object");
    }
    const auto& type = field(doc, "type");
    if (!type.is_string()) {
        fail("$.type", "expected \"dfa\" or \"nfa\"");
    }
    const auto kind = type.get<std::string>();
    try {
        if (kind == "dfa") {
            return read_dfa(doc);
        }
        if (kind == "nfa") {
            return read_nfa(doc);
        }
    } catch (const json::exception& e) {
        fail("$", e.what());
    }
    fail("$.type", "expected \"dfa\" or \"nfa\", got \"" + kind + "\"");
}

Automaton read_automaton_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError(path.string() + ": cannot open file");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_automaton(text.str());
}

std::string to_json(const Dfa& dfa) {
    json rows = json::array();
    for (State q = 0; q < dfa.state_count(); ++q) {
        json row = json::array();
        for (Letter a = 0; a < dfa.letter_count(); ++a) {
            row.push_back(dfa.next(q, a) + 1);
        }
        rows.push_back(std::move(row));
    }
    json doc;
    doc["type"] = "dfa";
    doc["alphabet"] = alphabet_json(dfa.alphabet());
    doc["states"] = dfa.state_count();
    doc["initial"] = dfa.initial() + 1;
    doc["finals"] = one_based(dfa.finals());
    doc["delta"] = std::move(rows);
    return doc.dump();
}

std::string to_json(const Nfa& nfa) {
    json moves = json::array();
    for (State q = 0; q < nfa.state_count(); ++q) {
        for (Letter a = 0; a <= nfa.alphabet().size(); ++a) {
            const Letter on = a == nfa.alphabet().size() ? kEpsilon : a;
            if (on == kEpsilon && !nfa.allows_epsilon()) {
                continue;
            }
            auto succ = nfa.successors(q, on);
            if (succ.empty()) {
                continue;
            }
            json move;
            move["from"] = q + 1;
            move["on"] = on == kEpsilon ? std::string("eps") : nfa.alphabet().name(on);
            move["to"] = one_based(std::vector<State>(succ.begin(), succ.end()));
            moves.push_back(std::move(move));
        }
    }
    json doc;
    doc["type"] = "nfa";
    doc["alphabet"] = alphabet_json(nfa.alphabet());
    doc["states"] = nfa.state_count();
    doc["initials"] = one_based(nfa.initials());
    doc["finals"] = one_based(nfa.finals());
    doc["moves"] = std::move(moves);
    return doc.dump();
}

void write_json_file(const std::filesystem::path& path, const Dfa& dfa) {
    std::ofstream out(path);
    if (!out) {
        throw InputError(path.string() + ": cannot open file for writing");
    }
    out << to_json(dfa) << '\n';
}

Dfa as_dfa(const Automaton& automaton) {
    if (const auto* dfa = std::get_if<Dfa>(&automaton)) {
        return *dfa;
    }
    return determinize(std::get<Nfa>(automaton));
}

}  // namespace starfree
