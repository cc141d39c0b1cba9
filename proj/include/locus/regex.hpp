// regex.hpp -- regular-expression front-end: parser, position automaton,
// marked variant, and a direct semantic enumerator
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
// Grammar, loosest to tightest binding:
//
//     expr   := term { '+' term }          union
//     term   := factor { factor }          concatenation by juxtaposition
//     factor := atom { '*' }               iteration
//     atom   := '(' expr ')' | '∅' | 'ε' | '_' | literal
//
// '∅' is the empty language, 'ε' and '_' both mean the empty word, and
// '()' is not permitted. A literal is a single codepoint from the declared
// alphabet; multi-codepoint tokens are written in single quotes, which also
// turns the reserved characters into ordinary literals. Whitespace between
// tokens is ignored.

#ifndef LOCUS_REGEX_HPP_
#define LOCUS_REGEX_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "locus/automata.hpp"

namespace locus {

enum class RegexKind { empty, epsilon, literal, concat, alternation, star };

/// Immutable expression node. Children are shared so subtrees can be
/// reused freely; star keeps its child in `left`.
struct RegexNode {
    RegexKind kind;
    Symbol literal;  // meaningful for literal nodes only
    std::shared_ptr<const RegexNode> left;
    std::shared_ptr<const RegexNode> right;
};

std::shared_ptr<const RegexNode> make_empty();
std::shared_ptr<const RegexNode> make_epsilon();
std::shared_ptr<const RegexNode> make_literal(Symbol sym);
std::shared_ptr<const RegexNode> make_concat(std::shared_ptr<const RegexNode> left,
                                             std::shared_ptr<const RegexNode> right);
std::shared_ptr<const RegexNode> make_union(std::shared_ptr<const RegexNode> left,
                                            std::shared_ptr<const RegexNode> right);
std::shared_ptr<const RegexNode> make_star(std::shared_ptr<const RegexNode> child);

/// A parsed expression together with the alphabet it was declared over.
/// The alphabet may be larger than the set of symbols that occur.
struct RegexAst {
    std::shared_ptr<const RegexNode> root;
    Alphabet alphabet;
};

/// Parse failure, carrying the 1-based codepoint position of the offending
/// token. Also raised for a literal outside the declared alphabet.
class RegexSyntaxError : public InputError {
public:
    RegexSyntaxError(std::size_t position, const std::string& detail)
        : InputError("regex syntax error at position " + std::to_string(position) +
                     ": " + detail),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses @p text over @p alphabet following the grammar above. Input must
/// be valid UTF-8. Throws RegexSyntaxError on malformed input or on a
/// literal the alphabet does not contain.
RegexAst parse_regex(const std::string& text, const Alphabet& alphabet);

/// Position automaton of r: one state per literal occurrence plus a start
/// state, transitions wired through the first, last, and follow relations.
/// ε-free, state_count = 1 + number of literal occurrences, language 𝓛(r).
Nfa glushkov(const RegexAst& r);

/// The position automaton with every literal occurrence relabeled by a
/// fresh symbol: the original token with the 1-based occurrence index
/// appended as a subscript ("(ab)*" yields alphabet {a₁, b₂}). In the rare
/// case two decorated tokens still collide, underscores are appended until
/// they differ. The resulting language is local.
Nfa marked_automaton(const RegexAst& r);

/// Words of 𝓛(r) up to max_len, computed inductively on the expression
/// with bounded star unrolling, in length-then-lexicographic order. An
/// intermediate word set larger than word_cap raises ResourceLimitError.
std::vector<Word> regex_semantics_enumerate(const RegexAst& r, std::size_t max_len,
                                            std::uint64_t word_cap = kDefaultEnumCap);

}  // namespace locus

#endif  // LOCUS_REGEX_HPP_
