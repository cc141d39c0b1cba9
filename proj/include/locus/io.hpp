// io.hpp -- JSON serialization of automata, window specifications, and
// gadget outputs, plus Graphviz export
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
//
// Automaton documents look like
//
//     {"alphabet": ["a","b"], "states": 3, "initial": [0], "final": [2],
//      "transitions": [[0,"a",1],[1,"b",2]]}
//
// with keys in exactly that order and transitions sorted by
// (source, symbol token, target). DFA documents carry a single integer
// under "initial" and set "deterministic": true after "transitions".
// Readers reject a malformed document with a diagnostic naming the first
// violation encountered.

#ifndef LOCUS_IO_HPP_
#define LOCUS_IO_HPP_

#include <string>

#include <json.hpp>

#include "locus/automata.hpp"
#include "locus/local.hpp"
#include "locus/reduction.hpp"

namespace locus {

using Json = nlohmann::ordered_json;

Json nfa_to_json(const Nfa& a);
Json dfa_to_json(const Dfa& d);

/// Window-specification document:
/// {"alphabet": [...], "first": [...], "last": [...],
///  "forbidden_bigrams": [["a","b"], ...], "epsilon": bool}
/// The document stores the forbidden two-letter windows; the reader
/// reconstructs the allowed complement.
Json spec_to_json(const LocalSpec& spec);

/// The gadget automaton document plus a "fresh_symbols" object mapping the
/// role names "a", "h1", "h2", "h3" to the chosen tokens.
Json gadget_to_json(const GadgetOutput& g);

/// Reads an automaton document. A single integer under "initial" (the DFA
/// convention) is accepted and treated as a one-element set. Throws
/// InputError on any format violation.
Nfa nfa_from_json(const Json& j);

/// Reads a DFA document: "initial" must be a single integer and
/// "deterministic": true must be present. Throws InputError on format
/// violations and on conflicting transitions.
Dfa dfa_from_json(const Json& j);

LocalSpec spec_from_json(const Json& j);

/// Parses the file at @p path. Open and parse failures become InputError
/// with the path in the message.
Json load_json(const std::string& path);

/// Writes @p j to @p path with two-space indentation and a trailing
/// newline. Throws InputError when the file cannot be written.
void store_json(const std::string& path, const Json& j);

/// Graphviz rendering: states as circles, final states doubled, initial
/// states marked by an inbound arrow, parallel edges merged into one
/// comma-separated label.
std::string to_dot(const Nfa& a);

/// A word as a JSON array of its symbol tokens, the rendering used for
/// witnesses inside reports.
Json word_to_json(const Word& w);

}  // namespace locus

#endif  // LOCUS_IO_HPP_
