#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "starfree/dfa.hpp"
#include "starfree/nfa.hpp"

namespace starfree {

/// Automaton as read from the JSON interchange format.
///
///   {"type":"dfa", "alphabet":["a","b"], "states":n, "initial":i,
///    "finals":[...], "delta":[[...], ...]}
///   {"type":"nfa", "alphabet":[...], "states":n, "initials":[...],
///    "finals":[...], "moves":[{"from":s, "on":"a"|"eps", "to":[...]}, ...]}
///
/// States are 1-based in files. "eps" is reserved in Nfa alphabets.
using Automaton = std::variant<Dfa, Nfa>;

/// Throws InputError whose message starts with the offending field path, e.g. "$.delta[2][1]".
Automaton parse_automaton(std::string_view json_text);
Automaton read_automaton_file(const std::filesystem::path& path);

std::string to_json(const Dfa& dfa);
std::string to_json(const Nfa& nfa);
void write_json_file(const std::filesystem::path& path, const Dfa& dfa);

/// The Dfa itself, or the determinization of an Nfa.
Dfa as_dfa(const Automaton& automaton);

}  // namespace starfree
