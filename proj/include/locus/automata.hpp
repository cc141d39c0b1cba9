// automata.hpp -- epsilon-free NFAs, partial DFAs, and the standard
// constructions on them
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

#ifndef LOCUS_AUTOMATA_HPP_
#define LOCUS_AUTOMATA_HPP_

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "locus/types.hpp"

namespace locus {

namespace internal {
/// Process-wide count of determinize() invocations. Tests use it to assert
/// that a code path stays clear of subset construction.
extern std::atomic<std::uint64_t> determinize_calls;
}  // namespace internal

using StateId = std::uint32_t;

/// A transition triple. Ordered by (source, symbol token, target), which is
/// also the serialization order.
struct Trans {
    StateId src;
    Symbol sym;
    StateId dst;

    auto operator<=>(const Trans&) const = default;
};

/// Nondeterministic finite automaton over an explicit alphabet. States are
/// the dense ids 0..state_count-1. The representation has no epsilon moves
/// by construction, transitions form a set, and every referenced state and
/// symbol is validated at construction. Zero states is legal and denotes
/// the empty language. Immutable after construction.
class Nfa {
public:
    Nfa(Alphabet alphabet, StateId state_count, std::vector<StateId> initial,
        std::vector<StateId> final_states, std::vector<Trans> transitions);

    const Alphabet& alphabet() const { return alphabet_; }
    StateId state_count() const { return state_count_; }
    const std::vector<StateId>& initial() const { return initial_; }
    const std::vector<StateId>& final_states() const { return final_; }
    const std::vector<Trans>& transitions() const { return transitions_; }

    bool is_initial(StateId q) const { return initial_set_.test(q); }
    bool is_final(StateId q) const { return final_set_.test(q); }
    const StateSet& initial_set() const { return initial_set_; }
    const StateSet& final_set() const { return final_set_; }

    /// Successors of @p q on the symbol with alphabet index @p sym_index,
    /// sorted ascending.
    std::span<const StateId> post(StateId q, std::size_t sym_index) const;
    /// Predecessors, the mirror image of post().
    std::span<const StateId> pre(StateId q, std::size_t sym_index) const;

    /// Image of a whole set under one symbol.
    StateSet post_set(const StateSet& states, std::size_t sym_index) const;
    StateSet pre_set(const StateSet& states, std::size_t sym_index) const;

    bool operator==(const Nfa& other) const;

private:
    Alphabet alphabet_;
    StateId state_count_ = 0;
    std::vector<StateId> initial_;
    std::vector<StateId> final_;
    std::vector<Trans> transitions_;

    StateSet initial_set_;
    StateSet final_set_;
    // CSR adjacency, indexed by state * |alphabet| + symbol.
    std::vector<std::uint32_t> post_offsets_;
    std::vector<StateId> post_targets_;
    std::vector<std::uint32_t> pre_offsets_;
    std::vector<StateId> pre_sources_;
};

/// Deterministic automaton with a possibly partial transition function;
/// a missing transition models the rejecting sink. At least one state
/// (the initial one) always exists.
class Dfa {
public:
    Dfa(Alphabet alphabet, StateId state_count, StateId initial,
        std::vector<StateId> final_states, std::vector<Trans> transitions);

    const Alphabet& alphabet() const { return alphabet_; }
    StateId state_count() const { return state_count_; }
    StateId initial() const { return initial_; }
    const std::vector<StateId>& final_states() const { return final_; }
    const std::vector<Trans>& transitions() const { return transitions_; }

    bool is_final(StateId q) const { return final_set_.test(q); }

    /// Target of the unique transition from @p q on symbol index @p sym_index,
    /// or nullopt when the function is undefined there.
    std::optional<StateId> step(StateId q, std::size_t sym_index) const;

    /// True when every (state, symbol) pair has a transition.
    bool is_total() const;

    bool operator==(const Dfa& other) const;

private:
    Alphabet alphabet_;
    StateId state_count_ = 0;
    StateId initial_ = 0;
    std::vector<StateId> final_;
    std::vector<Trans> transitions_;

    StateSet final_set_;
    std::vector<StateId> step_;  // state * |alphabet| + symbol -> target or kNoState
};

inline constexpr StateId kNoState = 0xFFFFFFFFu;

/// Membership test by forward set simulation. Throws InputError when a
/// symbol of @p word is not in the alphabet.
bool accepts(const Nfa& a, const Word& word);
bool accepts(const Dfa& d, const Word& word);

/// Restriction to states that are both reachable and co-reachable. Preserves
/// the language; an empty language yields a zero-state automaton.
Nfa trim(const Nfa& a);

/// Product automaton for the intersection of two languages over the same
/// alphabet; only reachable state pairs appear. Throws InputError on an
/// alphabet mismatch.
Nfa product_intersection(const Nfa& a, const Nfa& b);

/// Subset construction over reachable subsets. Throws ResourceLimitError
/// when more than @p subset_cap subsets arise.
Dfa determinize(const Nfa& a, std::uint64_t subset_cap = kDefaultSubsetCap);

/// Emptiness by reachability.
bool is_empty(const Nfa& a);

/// All words of the language of length at most @p max_len, in
/// length-then-lexicographic order. Throws ResourceLimitError when the
/// result would exceed @p word_cap words.
std::vector<Word> enumerate(const Nfa& a, std::size_t max_len,
                            std::uint64_t word_cap = kDefaultEnumCap);

/// Totalizes the transition function, adding at most one rejecting sink.
/// A DFA that is already total is returned unchanged.
Dfa complete(const Dfa& d);

/// The same automaton viewed as an Nfa.
Nfa to_nfa(const Dfa& d);

/// Reinterpret with a larger alphabet (must contain the current one).
Nfa with_alphabet(const Nfa& a, Alphabet alphabet);

/// Lexicographically least among the shortest accepted words, or nullopt
/// for the empty language.
std::optional<Word> shortest_word(const Nfa& a);

}  // namespace locus

#endif  // LOCUS_AUTOMATA_HPP_
