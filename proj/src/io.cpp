// io.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "locus/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace locus {

namespace {

constexpr std::int64_t kMaxStateId = 0xFFFFFFFE;  // kNoState is reserved

const Json& require_key(const Json& j, const char* key) {
    if (!j.is_object()) {
        throw InputError("top-level JSON value must be an object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        throw InputError(std::string("missing key \"") + key + "\"");
    }
    return *it;
}

StateId state_id_from(const Json& j, const char* context) {
    if (!j.is_number_integer()) {
        throw InputError(std::string(context) + " must be an integer state id");
    }
    const std::int64_t v = j.get<std::int64_t>();
    if (v < 0 || v > kMaxStateId) {
        throw InputError(std::string(context) + " state id " + std::to_string(v) +
                         " out of range");
    }
    return static_cast<StateId>(v);
}

std::vector<StateId> state_list_from(const Json& j, const char* key) {
    std::vector<StateId> out;
    if (!j.is_array()) {
        throw InputError(std::string("\"") + key + "\" must be an array of state ids");
    }
    const std::string context = std::string("\"") + key + "\"";
    for (const Json& entry : j) {
        out.push_back(state_id_from(entry, context.c_str()));
    }
    return out;
}

Symbol symbol_from(const Json& j, const char* context) {
    if (!j.is_string()) {
        throw InputError(std::string(context) + " must be a string");
    }
    std::string token = j.get<std::string>();
    if (!valid_symbol_token(token)) {
        throw InputError(std::string(context) + " '" + token +
                         "' is not a valid symbol token");
    }
    return Symbol(std::move(token));
}

Alphabet alphabet_from(const Json& j) {
    const Json& entry = require_key(j, "alphabet");
    if (!entry.is_array()) {
        throw InputError("\"alphabet\" must be an array of strings");
    }
    std::vector<Symbol> symbols;
    std::set<std::string> seen;
    for (const Json& item : entry) {
        Symbol sym = symbol_from(item, "alphabet entry");
        if (!seen.insert(sym.token).second) {
            throw InputError("duplicate alphabet token '" + sym.token + "'");
        }
        symbols.push_back(std::move(sym));
    }
    return Alphabet(std::move(symbols));
}

StateId state_count_from(const Json& j) {
    const Json& entry = require_key(j, "states");
    if (!entry.is_number_integer()) {
        throw InputError("\"states\" must be a non-negative integer");
    }
    const std::int64_t v = entry.get<std::int64_t>();
    if (v < 0) {
        throw InputError("\"states\" must be a non-negative integer");
    }
    if (v > kMaxStateId + 1) {
        throw InputError("\"states\" exceeds the supported maximum");
    }
    return static_cast<StateId>(v);
}

std::vector<Trans> transitions_from(const Json& j) {
    const Json& entry = require_key(j, "transitions");
    if (!entry.is_array()) {
        throw InputError("\"transitions\" must be an array");
    }
    std::vector<Trans> out;
    for (const Json& item : entry) {
        if (!item.is_array() || item.size() != 3) {
            throw InputError("each transition must be [source, symbol, target]");
        }
        const StateId src = state_id_from(item[0], "transition source");
        Symbol sym = symbol_from(item[1], "transition symbol");
        const StateId dst = state_id_from(item[2], "transition target");
        out.push_back({src, std::move(sym), dst});
    }
    return out;
}

void check_deterministic_flag(const Json& j, bool required) {
    const auto it = j.is_object() ? j.find("deterministic") : j.end();
    if (it == j.end()) {
        if (required) {
            throw InputError("a DFA file must set \"deterministic\": true");
        }
        return;
    }
    if (!it->is_boolean()) {
        throw InputError("\"deterministic\" must be a boolean");
    }
    if (required && !it->get<bool>()) {
        throw InputError("a DFA file must set \"deterministic\": true");
    }
}

/// Graphviz double-quoted string escaping.
std::string dot_quote(const std::string& text) {
    std::string out = "\"";
    for (const char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

Json nfa_to_json(const Nfa& a) {
    Json j = Json::object();
    Json alphabet = Json::array();
    for (const Symbol& s : a.alphabet().symbols()) alphabet.push_back(s.token);
    j["alphabet"] = std::move(alphabet);
    j["states"] = a.state_count();
    Json initial = Json::array();
    a.initial_set().for_each([&](StateId q) { initial.push_back(q); });
    j["initial"] = std::move(initial);
    Json final_states = Json::array();
    a.final_set().for_each([&](StateId q) { final_states.push_back(q); });
    j["final"] = std::move(final_states);
    Json transitions = Json::array();
    for (const Trans& t : a.transitions()) {
        transitions.push_back(Json::array({t.src, t.sym.token, t.dst}));
    }
    j["transitions"] = std::move(transitions);
    return j;
}

Json dfa_to_json(const Dfa& d) {
    Json j = Json::object();
    Json alphabet = Json::array();
    for (const Symbol& s : d.alphabet().symbols()) alphabet.push_back(s.token);
    j["alphabet"] = std::move(alphabet);
    j["states"] = d.state_count();
    j["initial"] = d.initial();
    j["final"] = d.final_states();
    Json transitions = Json::array();
    for (const Trans& t : d.transitions()) {
        transitions.push_back(Json::array({t.src, t.sym.token, t.dst}));
    }
    j["transitions"] = std::move(transitions);
    j["deterministic"] = true;
    return j;
}

Json spec_to_json(const LocalSpec& spec) {
    Json j = Json::object();
    Json alphabet = Json::array();
    for (const Symbol& s : spec.alphabet().symbols()) alphabet.push_back(s.token);
    j["alphabet"] = std::move(alphabet);
    Json first = Json::array();
    for (const Symbol& s : spec.first()) first.push_back(s.token);
    j["first"] = std::move(first);
    Json last = Json::array();
    for (const Symbol& s : spec.last()) last.push_back(s.token);
    j["last"] = std::move(last);
    Json forbidden = Json::array();
    const auto& allowed = spec.allowed_bigrams();
    for (const Symbol& x : spec.alphabet().symbols()) {
        for (const Symbol& y : spec.alphabet().symbols()) {
            const std::pair<Symbol, Symbol> window{x, y};
            if (!std::binary_search(allowed.begin(), allowed.end(), window)) {
                forbidden.push_back(Json::array({x.token, y.token}));
            }
        }
    }
    j["forbidden_bigrams"] = std::move(forbidden);
    j["epsilon"] = spec.accepts_epsilon();
    return j;
}

Json gadget_to_json(const GadgetOutput& g) {
    Json j = nfa_to_json(g.automaton);
    Json fresh = Json::object();
    fresh["a"] = g.fresh_symbols.pad.token;
    fresh["h1"] = g.fresh_symbols.open.token;
    fresh["h2"] = g.fresh_symbols.mid.token;
    fresh["h3"] = g.fresh_symbols.close.token;
    j["fresh_symbols"] = std::move(fresh);
    return j;
}

Nfa nfa_from_json(const Json& j) {
    Alphabet alphabet = alphabet_from(j);
    const StateId states = state_count_from(j);
    const Json& initial_entry = require_key(j, "initial");
    std::vector<StateId> initial;
    if (initial_entry.is_number_integer()) {
        initial.push_back(state_id_from(initial_entry, "\"initial\""));
    } else {
        initial = state_list_from(initial_entry, "initial");
    }
    std::vector<StateId> final_states =
        state_list_from(require_key(j, "final"), "final");
    std::vector<Trans> transitions = transitions_from(j);
    check_deterministic_flag(j, /*required=*/false);
    return Nfa(std::move(alphabet), states, std::move(initial),
               std::move(final_states), std::move(transitions));
}

Dfa dfa_from_json(const Json& j) {
    Alphabet alphabet = alphabet_from(j);
    const StateId states = state_count_from(j);
    const Json& initial_entry = require_key(j, "initial");
    if (!initial_entry.is_number_integer()) {
        throw InputError("DFA \"initial\" must be a single state id");
    }
    const StateId initial = state_id_from(initial_entry, "\"initial\"");
    std::vector<StateId> final_states =
        state_list_from(require_key(j, "final"), "final");
    std::vector<Trans> transitions = transitions_from(j);
    check_deterministic_flag(j, /*required=*/true);
    return Dfa(std::move(alphabet), states, initial, std::move(final_states),
               std::move(transitions));
}

LocalSpec spec_from_json(const Json& j) {
    Alphabet alphabet = alphabet_from(j);

    auto symbols_of = [&](const char* key) {
        const Json& entry = require_key(j, key);
        if (!entry.is_array()) {
            throw InputError(std::string("\"") + key + "\" must be an array of symbols");
        }
        std::vector<Symbol> out;
        const std::string context = std::string("\"") + key + "\" entry";
        for (const Json& item : entry) {
            out.push_back(symbol_from(item, context.c_str()));
        }
        return out;
    };
    std::vector<Symbol> first = symbols_of("first");
    std::vector<Symbol> last = symbols_of("last");

    const Json& forbidden_entry = require_key(j, "forbidden_bigrams");
    if (!forbidden_entry.is_array()) {
        throw InputError("\"forbidden_bigrams\" must be an array of symbol pairs");
    }
    std::set<std::pair<Symbol, Symbol>> forbidden;
    for (const Json& item : forbidden_entry) {
        if (!item.is_array() || item.size() != 2) {
            throw InputError("each forbidden bigram must be [first, second]");
        }
        Symbol x = symbol_from(item[0], "forbidden-bigram symbol");
        Symbol y = symbol_from(item[1], "forbidden-bigram symbol");
        for (const Symbol& s : {x, y}) {
            if (!alphabet.contains(s)) {
                throw InputError("forbidden-bigram symbol '" + s.token +
                                 "' not in alphabet");
            }
        }
        forbidden.emplace(std::move(x), std::move(y));
    }
    std::vector<std::pair<Symbol, Symbol>> allowed;
    for (const Symbol& x : alphabet.symbols()) {
        for (const Symbol& y : alphabet.symbols()) {
            if (forbidden.find({x, y}) == forbidden.end()) {
                allowed.emplace_back(x, y);
            }
        }
    }

    const Json& epsilon_entry = require_key(j, "epsilon");
    if (!epsilon_entry.is_boolean()) {
        throw InputError("\"epsilon\" must be a boolean");
    }

    return LocalSpec(std::move(alphabet), std::move(first), std::move(last),
                     std::move(allowed), epsilon_entry.get<bool>());
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError(path + ": cannot open file");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

void store_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) {
        throw InputError(path + ": cannot open file for writing");
    }
    out << j.dump(2) << '\n';
    if (!out) {
        throw InputError(path + ": write failed");
    }
}

std::string to_dot(const Nfa& a) {
    std::ostringstream out;
    out << "digraph automaton {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    a.final_set().for_each([&](StateId q) {
        out << "  " << q << " [shape=doublecircle];\n";
    });
    std::size_t mark = 0;
    a.initial_set().for_each([&](StateId q) {
        out << "  i" << mark << " [shape=point];\n";
        out << "  i" << mark << " -> " << q << ";\n";
        ++mark;
    });
    std::map<std::pair<StateId, StateId>, std::string> labels;
    for (const Trans& t : a.transitions()) {
        std::string& label = labels[{t.src, t.dst}];
        if (!label.empty()) label += ", ";
        label += t.sym.token;
    }
    for (const auto& [edge, label] : labels) {
        out << "  " << edge.first << " -> " << edge.second
            << " [label=" << dot_quote(label) << "];\n";
    }
    out << "}\n";
    return out.str();
}

Json word_to_json(const Word& w) {
    Json out = Json::array();
    for (const Symbol& s : w) out.push_back(s.token);
    return out;
}

}  // namespace locus
