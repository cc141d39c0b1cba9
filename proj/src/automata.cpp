// automata.cpp
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

#include "locus/automata.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <unordered_map>
#include <utility>

namespace locus {

namespace internal {
std::atomic<std::uint64_t> determinize_calls{0};
}  // namespace internal

namespace {

std::vector<StateId> sorted_unique(std::vector<StateId> states) {
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    return states;
}

void check_state_range(const char* role, StateId q, StateId state_count) {
    if (q >= state_count) {
        throw InputError(std::string(role) + " state " + std::to_string(q) +
                         " out of range (states = " + std::to_string(state_count) + ")");
    }
}

StateSet make_set(StateId state_count, const std::vector<StateId>& members) {
    StateSet set(state_count);
    for (StateId q : members) {
        set.set(q);
    }
    return set;
}

// CSR construction shared by the forward and backward indexes.
void build_csr(StateId state_count, std::size_t alphabet_size,
               const std::vector<Trans>& transitions, const Alphabet& alphabet,
               bool forward, std::vector<std::uint32_t>& offsets,
               std::vector<StateId>& targets) {
    const std::size_t cells = static_cast<std::size_t>(state_count) * alphabet_size;
    offsets.assign(cells + 1, 0);
    for (const Trans& t : transitions) {
        const std::size_t sym = *alphabet.index_of(t.sym);
        const StateId from = forward ? t.src : t.dst;
        offsets[static_cast<std::size_t>(from) * alphabet_size + sym + 1] += 1;
    }
    for (std::size_t i = 1; i < offsets.size(); ++i) {
        offsets[i] += offsets[i - 1];
    }
    targets.resize(transitions.size());
    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const Trans& t : transitions) {
        const std::size_t sym = *alphabet.index_of(t.sym);
        const StateId from = forward ? t.src : t.dst;
        const StateId to = forward ? t.dst : t.src;
        targets[cursor[static_cast<std::size_t>(from) * alphabet_size + sym]++] = to;
    }
    // Transitions are sorted by (src, sym, dst), so forward cells come out
    // ascending already; backward cells need a per-cell sort.
    if (!forward) {
        for (std::size_t cell = 0; cell < cells; ++cell) {
            std::sort(targets.begin() + offsets[cell], targets.begin() + offsets[cell + 1]);
        }
    }
}

}  // namespace

Nfa::Nfa(Alphabet alphabet, StateId state_count, std::vector<StateId> initial,
         std::vector<StateId> final_states, std::vector<Trans> transitions)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(sorted_unique(std::move(initial))),
      final_(sorted_unique(std::move(final_states))),
      transitions_(std::move(transitions)) {
    for (StateId q : initial_) {
        check_state_range("initial", q, state_count_);
    }
    for (StateId q : final_) {
        check_state_range("final", q, state_count_);
    }
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                       transitions_.end());
    for (const Trans& t : transitions_) {
        check_state_range("transition source", t.src, state_count_);
        check_state_range("transition target", t.dst, state_count_);
        if (!alphabet_.contains(t.sym)) {
            throw InputError("transition symbol '" + t.sym.token + "' not in alphabet");
        }
    }

    initial_set_ = make_set(state_count_, initial_);
    final_set_ = make_set(state_count_, final_);
    build_csr(state_count_, alphabet_.size(), transitions_, alphabet_, true,
              post_offsets_, post_targets_);
    build_csr(state_count_, alphabet_.size(), transitions_, alphabet_, false,
              pre_offsets_, pre_sources_);
}

std::span<const StateId> Nfa::post(StateId q, std::size_t sym_index) const {
    const std::size_t cell = static_cast<std::size_t>(q) * alphabet_.size() + sym_index;
    return {post_targets_.data() + post_offsets_[cell],
            post_targets_.data() + post_offsets_[cell + 1]};
}

std::span<const StateId> Nfa::pre(StateId q, std::size_t sym_index) const {
    const std::size_t cell = static_cast<std::size_t>(q) * alphabet_.size() + sym_index;
    return {pre_sources_.data() + pre_offsets_[cell],
            pre_sources_.data() + pre_offsets_[cell + 1]};
}

StateSet Nfa::post_set(const StateSet& states, std::size_t sym_index) const {
    StateSet out(state_count_);
    states.for_each([&](std::size_t q) {
        for (StateId t : post(static_cast<StateId>(q), sym_index)) {
            out.set(t);
        }
    });
    return out;
}

StateSet Nfa::pre_set(const StateSet& states, std::size_t sym_index) const {
    StateSet out(state_count_);
    states.for_each([&](std::size_t q) {
        for (StateId s : pre(static_cast<StateId>(q), sym_index)) {
            out.set(s);
        }
    });
    return out;
}

bool Nfa::operator==(const Nfa& other) const {
    return alphabet_ == other.alphabet_ && state_count_ == other.state_count_ &&
           initial_ == other.initial_ && final_ == other.final_ &&
           transitions_ == other.transitions_;
}

Dfa::Dfa(Alphabet alphabet, StateId state_count, StateId initial,
         std::vector<StateId> final_states, std::vector<Trans> transitions)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(initial),
      final_(sorted_unique(std::move(final_states))),
      transitions_(std::move(transitions)) {
    if (state_count_ == 0) {
        throw InputError("a DFA needs at least one state to hold the initial state");
    }
    check_state_range("initial", initial_, state_count_);
    for (StateId q : final_) {
        check_state_range("final", q, state_count_);
    }
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                       transitions_.end());

    final_set_ = make_set(state_count_, final_);
    step_.assign(static_cast<std::size_t>(state_count_) * alphabet_.size(), kNoState);
    for (const Trans& t : transitions_) {
        check_state_range("transition source", t.src, state_count_);
        check_state_range("transition target", t.dst, state_count_);
        const auto sym = alphabet_.index_of(t.sym);
        if (!sym) {
            throw InputError("transition symbol '" + t.sym.token + "' not in alphabet");
        }
        StateId& slot = step_[static_cast<std::size_t>(t.src) * alphabet_.size() + *sym];
        if (slot != kNoState) {
            throw InputError("conflicting transitions from state " +
                             std::to_string(t.src) + " on symbol '" + t.sym.token + "'");
        }
        slot = t.dst;
    }
}

std::optional<StateId> Dfa::step(StateId q, std::size_t sym_index) const {
    const StateId t = step_[static_cast<std::size_t>(q) * alphabet_.size() + sym_index];
    if (t == kNoState) {
        return std::nullopt;
    }
    return t;
}

bool Dfa::is_total() const {
    for (StateId t : step_) {
        if (t == kNoState) {
            return false;
        }
    }
    return true;
}

bool Dfa::operator==(const Dfa& other) const {
    return alphabet_ == other.alphabet_ && state_count_ == other.state_count_ &&
           initial_ == other.initial_ && final_ == other.final_ &&
           transitions_ == other.transitions_;
}

bool accepts(const Nfa& a, const Word& word) {
    StateSet current = a.initial_set();
    for (const Symbol& sym : word) {
        const auto index = a.alphabet().index_of(sym);
        if (!index) {
            throw InputError("symbol '" + sym.token + "' not in alphabet");
        }
        if (current.none()) {
            return false;
        }
        current = a.post_set(current, *index);
    }
    return current.intersects(a.final_set());
}

bool accepts(const Dfa& d, const Word& word) {
    StateId q = d.initial();
    for (const Symbol& sym : word) {
        const auto index = d.alphabet().index_of(sym);
        if (!index) {
            throw InputError("symbol '" + sym.token + "' not in alphabet");
        }
        const auto next = d.step(q, *index);
        if (!next) {
            return false;
        }
        q = *next;
    }
    return d.is_final(q);
}

namespace {

StateSet forward_reachable(const Nfa& a) {
    StateSet seen = a.initial_set();
    std::deque<StateId> queue(a.initial().begin(), a.initial().end());
    while (!queue.empty()) {
        const StateId q = queue.front();
        queue.pop_front();
        for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
            for (StateId t : a.post(q, s)) {
                if (!seen.test(t)) {
                    seen.set(t);
                    queue.push_back(t);
                }
            }
        }
    }
    return seen;
}

StateSet backward_reachable(const Nfa& a) {
    StateSet seen = a.final_set();
    std::deque<StateId> queue(a.final_states().begin(), a.final_states().end());
    while (!queue.empty()) {
        const StateId q = queue.front();
        queue.pop_front();
        for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
            for (StateId p : a.pre(q, s)) {
                if (!seen.test(p)) {
                    seen.set(p);
                    queue.push_back(p);
                }
            }
        }
    }
    return seen;
}

}  // namespace

Nfa trim(const Nfa& a) {
    const StateSet reach = forward_reachable(a);
    const StateSet coreach = backward_reachable(a);

    std::vector<StateId> remap(a.state_count(), kNoState);
    StateId kept = 0;
    for (StateId q = 0; q < a.state_count(); ++q) {
        if (reach.test(q) && coreach.test(q)) {
            remap[q] = kept++;
        }
    }

    std::vector<StateId> initial;
    for (StateId q : a.initial()) {
        if (remap[q] != kNoState) {
            initial.push_back(remap[q]);
        }
    }
    std::vector<StateId> final_states;
    for (StateId q : a.final_states()) {
        if (remap[q] != kNoState) {
            final_states.push_back(remap[q]);
        }
    }
    std::vector<Trans> transitions;
    for (const Trans& t : a.transitions()) {
        if (remap[t.src] != kNoState && remap[t.dst] != kNoState) {
            transitions.push_back({remap[t.src], t.sym, remap[t.dst]});
        }
    }
    return Nfa(a.alphabet(), kept, std::move(initial), std::move(final_states),
               std::move(transitions));
}

Nfa product_intersection(const Nfa& a, const Nfa& b) {
    if (a.alphabet() != b.alphabet()) {
        throw InputError("product_intersection requires equal alphabets");
    }

    std::unordered_map<std::uint64_t, StateId> ids;
    std::vector<std::pair<StateId, StateId>> pairs;
    std::deque<StateId> queue;
    const auto key = [&](StateId p, StateId q) {
        return (static_cast<std::uint64_t>(p) << 32) | q;
    };
    const auto intern = [&](StateId p, StateId q) {
        const auto [it, fresh] = ids.try_emplace(key(p, q), static_cast<StateId>(pairs.size()));
        if (fresh) {
            pairs.emplace_back(p, q);
            queue.push_back(it->second);
        }
        return it->second;
    };

    for (StateId p : a.initial()) {
        for (StateId q : b.initial()) {
            intern(p, q);
        }
    }
    std::vector<StateId> initial;
    for (StateId i = 0; i < pairs.size(); ++i) {
        initial.push_back(i);
    }

    std::vector<Trans> transitions;
    std::vector<StateId> final_states;
    while (!queue.empty()) {
        const StateId id = queue.front();
        queue.pop_front();
        const auto [p, q] = pairs[id];
        if (a.is_final(p) && b.is_final(q)) {
            final_states.push_back(id);
        }
        for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
            for (StateId pt : a.post(p, s)) {
                for (StateId qt : b.post(q, s)) {
                    transitions.push_back({id, a.alphabet().at(s), intern(pt, qt)});
                }
            }
        }
    }
    return Nfa(a.alphabet(), static_cast<StateId>(pairs.size()), std::move(initial),
               std::move(final_states), std::move(transitions));
}

Dfa determinize(const Nfa& a, std::uint64_t subset_cap) {
    internal::determinize_calls.fetch_add(1, std::memory_order_relaxed);
    std::unordered_map<StateSet, StateId, StateSetHash> ids;
    std::vector<StateSet> subsets;
    std::deque<StateId> queue;

    const auto intern = [&](const StateSet& subset) {
        const auto [it, fresh] = ids.try_emplace(subset, static_cast<StateId>(subsets.size()));
        if (fresh) {
            if (subsets.size() >= subset_cap) {
                throw ResourceLimitError("determinization exceeded the subset cap of " +
                                         std::to_string(subset_cap));
            }
            subsets.push_back(subset);
            queue.push_back(it->second);
        }
        return it->second;
    };

    intern(a.initial_set());
    std::vector<Trans> transitions;
    std::vector<StateId> final_states;
    while (!queue.empty()) {
        const StateId id = queue.front();
        queue.pop_front();
        if (subsets[id].intersects(a.final_set())) {
            final_states.push_back(id);
        }
        for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
            const StateSet image = a.post_set(subsets[id], s);
            if (image.none()) {
                continue;  // partiality models the rejecting sink
            }
            transitions.push_back({id, a.alphabet().at(s), intern(image)});
        }
    }
    return Dfa(a.alphabet(), static_cast<StateId>(subsets.size()), 0,
               std::move(final_states), std::move(transitions));
}

bool is_empty(const Nfa& a) {
    return !forward_reachable(a).intersects(a.final_set());
}

std::vector<Word> enumerate(const Nfa& a, std::size_t max_len, std::uint64_t word_cap) {
    std::vector<Word> words;
    const auto emit = [&](const std::vector<std::uint32_t>& prefix) {
        if (words.size() >= word_cap) {
            throw ResourceLimitError("enumeration exceeded the cap of " +
                                     std::to_string(word_cap) + " words");
        }
        Word word;
        word.reserve(prefix.size());
        for (std::uint32_t s : prefix) {
            word.push_back(a.alphabet().at(s));
        }
        words.push_back(std::move(word));
    };

    // Prefixes are stored as alphabet indexes together with the state set
    // they reach; each level is kept in lexicographic order by expanding
    // parents in order and symbols in token order.
    struct Prefix {
        std::vector<std::uint32_t> symbols;
        StateSet states;
    };
    std::vector<Prefix> level;
    level.push_back({{}, a.initial_set()});
    if (a.initial_set().intersects(a.final_set())) {
        emit({});
    }
    for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
        std::vector<Prefix> next;
        for (const Prefix& prefix : level) {
            for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
                StateSet image = a.post_set(prefix.states, s);
                if (image.none()) {
                    continue;
                }
                std::vector<std::uint32_t> symbols = prefix.symbols;
                symbols.push_back(static_cast<std::uint32_t>(s));
                if (image.intersects(a.final_set())) {
                    emit(symbols);
                }
                next.push_back({std::move(symbols), std::move(image)});
            }
        }
        level = std::move(next);
    }
    return words;
}

Dfa complete(const Dfa& d) {
    if (d.is_total()) {
        return d;
    }
    const StateId sink = d.state_count();
    std::vector<Trans> transitions = d.transitions();
    for (StateId q = 0; q < d.state_count(); ++q) {
        for (std::size_t s = 0; s < d.alphabet().size(); ++s) {
            if (!d.step(q, s)) {
                transitions.push_back({q, d.alphabet().at(s), sink});
            }
        }
    }
    for (std::size_t s = 0; s < d.alphabet().size(); ++s) {
        transitions.push_back({sink, d.alphabet().at(s), sink});
    }
    return Dfa(d.alphabet(), d.state_count() + 1, d.initial(), d.final_states(),
               std::move(transitions));
}

Nfa to_nfa(const Dfa& d) {
    return Nfa(d.alphabet(), d.state_count(), {d.initial()}, d.final_states(),
               d.transitions());
}

Nfa with_alphabet(const Nfa& a, Alphabet alphabet) {
    for (const Symbol& sym : a.alphabet().symbols()) {
        if (!alphabet.contains(sym)) {
            throw InputError("with_alphabet: new alphabet drops symbol '" + sym.token + "'");
        }
    }
    return Nfa(std::move(alphabet), a.state_count(), a.initial(), a.final_states(),
               a.transitions());
}

std::optional<Word> shortest_word(const Nfa& a) {
    constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> accept_dist(a.state_count(), kInf);
    std::deque<StateId> queue;
    for (StateId q : a.final_states()) {
        accept_dist[q] = 0;
        queue.push_back(q);
    }
    while (!queue.empty()) {
        const StateId q = queue.front();
        queue.pop_front();
        for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
            for (StateId p : a.pre(q, s)) {
                if (accept_dist[p] == kInf) {
                    accept_dist[p] = accept_dist[q] + 1;
                    queue.push_back(p);
                }
            }
        }
    }

    std::uint32_t best = kInf;
    for (StateId q : a.initial()) {
        best = std::min(best, accept_dist[q]);
    }
    if (best == kInf) {
        return std::nullopt;
    }

    // Greedy walk: keep exactly the states that can still finish within the
    // remaining budget and take the least symbol that preserves one of them.
    Word word;
    StateSet current(a.state_count());
    for (StateId q : a.initial()) {
        if (accept_dist[q] == best) {
            current.set(q);
        }
    }
    for (std::uint32_t remaining = best; remaining > 0; --remaining) {
        for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
            StateSet narrowed(a.state_count());
            a.post_set(current, s).for_each([&](std::size_t q) {
                if (accept_dist[q] == remaining - 1) {
                    narrowed.set(q);
                }
            });
            if (narrowed.any()) {
                word.push_back(a.alphabet().at(s));
                current = std::move(narrowed);
                break;
            }
        }
    }
    return word;
}

}  // namespace locus
