// local.hpp -- local-language specifications, profile extraction, local
// closure, and the locality decisions
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
// A language is local when membership is decided by looking at a word
// through a sliding window of width two: a set of permitted first letters,
// permitted last letters, permitted adjacent pairs, and a flag for the
// empty word. Locality of a regular language is decided here by building
// the least local language containing it (the local closure) and testing
// whether the closure leaks outside the original language.

#ifndef LOCUS_LOCAL_HPP_
#define LOCUS_LOCAL_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "locus/automata.hpp"
#include "locus/inclusion.hpp"
#include "locus/report.hpp"

namespace locus {

/// Window description of a local language: permitted first letters,
/// permitted last letters, permitted adjacent pairs, and whether the empty
/// word belongs. The forbidden pairs are the complement of allowed_bigrams
/// within alphabet × alphabet. Construction sorts, dedupes, and validates
/// membership in the alphabet.
class LocalSpec {
public:
    LocalSpec() = default;
    LocalSpec(Alphabet alphabet, std::vector<Symbol> first, std::vector<Symbol> last,
              std::vector<std::pair<Symbol, Symbol>> allowed_bigrams,
              bool accepts_epsilon);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Symbol>& first() const { return first_; }
    const std::vector<Symbol>& last() const { return last_; }
    const std::vector<std::pair<Symbol, Symbol>>& allowed_bigrams() const {
        return allowed_bigrams_;
    }
    bool accepts_epsilon() const { return accepts_epsilon_; }

    /// Word-level membership: right first letter, right last letter, every
    /// adjacent pair allowed; the empty word by flag. Throws InputError on
    /// symbols outside the alphabet.
    bool allows(const Word& word) const;

    bool operator==(const LocalSpec&) const = default;

private:
    Alphabet alphabet_;
    std::vector<Symbol> first_;
    std::vector<Symbol> last_;
    std::vector<std::pair<Symbol, Symbol>> allowed_bigrams_;
    bool accepts_epsilon_ = false;
};

/// The canonical recognizer of the described language: a start state plus
/// one state per letter remembering the letter just read. Deterministic and
/// possibly partial; state_count = |alphabet| + 1.
Dfa spec_to_dfa(const LocalSpec& spec);

/// Window profile of 𝓛(a), computed on the trimmed automaton: first =
/// labels leaving initial states, last = labels entering final states,
/// allowed pairs = {(x, y) : some useful state has an incoming x and an
/// outgoing y}; the empty-word flag is read from the untrimmed automaton.
/// These are exactly the first letters, last letters, and width-2 windows
/// realized by words of 𝓛(a).
LocalSpec extract_local_spec(const Nfa& a);

/// spec_to_dfa(extract_local_spec(a)): recognizes the least local language
/// containing 𝓛(a).
Dfa local_closure(const Nfa& a);

/// Is 𝓛(a) local? Decided as inclusion of the local closure back in a;
/// 𝓛(a) sits inside its closure by construction, so equality is exactly
/// closure ⊆ a. A false verdict carries the least word accepted by the
/// closure and rejected by a.
CheckReport is_local_nfa(const Nfa& a, const InclusionConfig& cfg = {});

/// Same verdict as is_local_nfa on deterministic input, decided in
/// polynomial time by a product search of the closure against the
/// complemented input. Never determinizes.
CheckReport is_local_dfa(const Dfa& d);

/// Bounded hunt for a pivot-exchange violation: scans all pairs of words up
/// to @p max_len from the language with all decompositions sharing a pivot
/// letter, in the fixed order (|w1|, w1, |w2|, w2, pivot position in w1,
/// pivot position in w2), and returns the first exchange the language
/// rejects. A witness proves non-locality outright (the exchanged word is
/// tested exactly); absence at a bound is inconclusive. Throws
/// ResourceLimitError when the enumeration exceeds @p word_cap words.
std::optional<CartesianWitness> cartesian_oracle(const Nfa& a, std::size_t max_len,
                                                 std::uint64_t word_cap = kDefaultEnumCap);

}  // namespace locus

#endif  // LOCUS_LOCAL_HPP_
