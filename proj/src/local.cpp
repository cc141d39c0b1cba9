// local.cpp
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

#include "locus/local.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

namespace locus {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_member(const Alphabet& alphabet, const Symbol& sym, const char* role) {
    if (!alphabet.contains(sym)) {
        throw InputError(std::string(role) + " symbol '" + sym.token +
                         "' not in alphabet");
    }
}

template <typename T>
void sort_unique(std::vector<T>& values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
}

}  // namespace

LocalSpec::LocalSpec(Alphabet alphabet, std::vector<Symbol> first,
                     std::vector<Symbol> last,
                     std::vector<std::pair<Symbol, Symbol>> allowed_bigrams,
                     bool accepts_epsilon)
    : alphabet_(std::move(alphabet)),
      first_(std::move(first)),
      last_(std::move(last)),
      allowed_bigrams_(std::move(allowed_bigrams)),
      accepts_epsilon_(accepts_epsilon) {
    sort_unique(first_);
    sort_unique(last_);
    sort_unique(allowed_bigrams_);
    for (const Symbol& sym : first_) {
        require_member(alphabet_, sym, "first-letter");
    }
    for (const Symbol& sym : last_) {
        require_member(alphabet_, sym, "last-letter");
    }
    for (const auto& [x, y] : allowed_bigrams_) {
        require_member(alphabet_, x, "bigram");
        require_member(alphabet_, y, "bigram");
    }
}

bool LocalSpec::allows(const Word& word) const {
    for (const Symbol& sym : word) {
        require_member(alphabet_, sym, "word");
    }
    if (word.empty()) {
        return accepts_epsilon_;
    }
    if (!std::binary_search(first_.begin(), first_.end(), word.front())) {
        return false;
    }
    if (!std::binary_search(last_.begin(), last_.end(), word.back())) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (!std::binary_search(allowed_bigrams_.begin(), allowed_bigrams_.end(),
                                std::make_pair(word[i], word[i + 1]))) {
            return false;
        }
    }
    return true;
}

Dfa spec_to_dfa(const LocalSpec& spec) {
    const Alphabet& alphabet = spec.alphabet();
    const auto letter_state = [&](const Symbol& sym) {
        return static_cast<StateId>(1 + *alphabet.index_of(sym));
    };
    std::vector<Trans> transitions;
    for (const Symbol& sym : spec.first()) {
        transitions.push_back({0, sym, letter_state(sym)});
    }
    for (const auto& [x, y] : spec.allowed_bigrams()) {
        transitions.push_back({letter_state(x), y, letter_state(y)});
    }
    std::vector<StateId> final_states;
    if (spec.accepts_epsilon()) {
        final_states.push_back(0);
    }
    for (const Symbol& sym : spec.last()) {
        final_states.push_back(letter_state(sym));
    }
    return Dfa(alphabet, static_cast<StateId>(1 + alphabet.size()), 0,
               std::move(final_states), std::move(transitions));
}

LocalSpec extract_local_spec(const Nfa& a) {
    const Nfa t = trim(a);
    const std::size_t symbols = t.alphabet().size();

    std::set<Symbol> first;
    for (StateId q : t.initial()) {
        for (std::size_t s = 0; s < symbols; ++s) {
            if (!t.post(q, s).empty()) {
                first.insert(t.alphabet().at(s));
            }
        }
    }
    std::set<Symbol> last;
    for (StateId q : t.final_states()) {
        for (std::size_t s = 0; s < symbols; ++s) {
            if (!t.pre(q, s).empty()) {
                last.insert(t.alphabet().at(s));
            }
        }
    }
    std::set<std::pair<Symbol, Symbol>> bigrams;
    for (StateId q = 0; q < t.state_count(); ++q) {
        for (std::size_t in = 0; in < symbols; ++in) {
            if (t.pre(q, in).empty()) {
                continue;
            }
            for (std::size_t out = 0; out < symbols; ++out) {
                if (!t.post(q, out).empty()) {
                    bigrams.insert({t.alphabet().at(in), t.alphabet().at(out)});
                }
            }
        }
    }
    // The empty-word flag comes from the untrimmed automaton so that inputs
    // whose whole language is {ε} keep it through degenerate cases.
    const bool epsilon = a.initial_set().intersects(a.final_set());
    return LocalSpec(a.alphabet(), {first.begin(), first.end()},
                     {last.begin(), last.end()}, {bigrams.begin(), bigrams.end()},
                     epsilon);
}

Dfa local_closure(const Nfa& a) {
    return spec_to_dfa(extract_local_spec(a));
}

CheckReport is_local_nfa(const Nfa& a, const InclusionConfig& cfg) {
    return inclusion(to_nfa(local_closure(a)), a, cfg);
}

CheckReport is_local_dfa(const Dfa& d) {
    const auto start = Clock::now();
    const Dfa closure = local_closure(to_nfa(d));
    const Dfa total = complete(d);
    std::vector<StateId> flipped;
    for (StateId q = 0; q < total.state_count(); ++q) {
        if (!total.is_final(q)) {
            flipped.push_back(q);
        }
    }
    const Dfa complement(total.alphabet(), total.state_count(), total.initial(),
                         std::move(flipped), total.transitions());
    const Nfa leak = product_intersection(to_nfa(closure), to_nfa(complement));

    CheckReport report;
    report.witness = shortest_word(leak);
    report.verdict = !report.witness.has_value();
    report.stats.explored = leak.state_count();
    report.stats.elapsed_ms = ms_since(start);
    return report;
}

namespace {

// Per-word position analysis: fwd[i] is the state set reached on the first
// i letters; bwd[i] is the set of states from which the suffix starting at
// position i is accepted. The word glued from w1's prefix through its pivot
// and w2's suffix after its pivot is accepted exactly when
// fwd1[p1 + 1] ∩ bwd2[p2 + 1] ≠ ∅.
struct WordAnalysis {
    std::vector<std::uint32_t> syms;  // alphabet indexes of the letters
    std::vector<StateSet> fwd;
    std::vector<StateSet> bwd;
};

WordAnalysis analyze(const Nfa& a, const Word& word) {
    WordAnalysis out;
    const std::size_t n = word.size();
    out.syms.reserve(n);
    for (const Symbol& sym : word) {
        out.syms.push_back(static_cast<std::uint32_t>(*a.alphabet().index_of(sym)));
    }
    out.fwd.resize(n + 1);
    out.fwd[0] = a.initial_set();
    for (std::size_t i = 0; i < n; ++i) {
        out.fwd[i + 1] = a.post_set(out.fwd[i], out.syms[i]);
    }
    out.bwd.resize(n + 1);
    out.bwd[n] = a.final_set();
    for (std::size_t i = n; i > 0; --i) {
        out.bwd[i - 1] = a.pre_set(out.bwd[i], out.syms[i - 1]);
    }
    return out;
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from),
                w.begin() + static_cast<std::ptrdiff_t>(to));
}

}  // namespace

std::optional<CartesianWitness> cartesian_oracle(const Nfa& a, std::size_t max_len,
                                                 std::uint64_t word_cap) {
    const std::vector<Word> lang = enumerate(a, max_len, word_cap);
    std::vector<WordAnalysis> info;
    info.reserve(lang.size());
    for (const Word& w : lang) {
        info.push_back(analyze(a, w));
    }

    // Distinct suffix-acceptance sets per pivot letter, for a cheap
    // per-word existence test before the full ordered scan.
    std::vector<std::vector<StateSet>> pools(a.alphabet().size());
    {
        std::vector<std::unordered_set<StateSet, StateSetHash>> seen(a.alphabet().size());
        for (const WordAnalysis& wa : info) {
            for (std::size_t p = 0; p < wa.syms.size(); ++p) {
                if (seen[wa.syms[p]].insert(wa.bwd[p + 1]).second) {
                    pools[wa.syms[p]].push_back(wa.bwd[p + 1]);
                }
            }
        }
    }

    for (std::size_t i1 = 0; i1 < lang.size(); ++i1) {
        const WordAnalysis& a1 = info[i1];
        bool possible = false;
        for (std::size_t p1 = 0; p1 < a1.syms.size() && !possible; ++p1) {
            for (const StateSet& suffix : pools[a1.syms[p1]]) {
                if (!a1.fwd[p1 + 1].intersects(suffix)) {
                    possible = true;
                    break;
                }
            }
        }
        if (!possible) {
            continue;
        }
        for (std::size_t i2 = 0; i2 < lang.size(); ++i2) {
            const WordAnalysis& a2 = info[i2];
            for (std::size_t p1 = 0; p1 < a1.syms.size(); ++p1) {
                for (std::size_t p2 = 0; p2 < a2.syms.size(); ++p2) {
                    if (a1.syms[p1] != a2.syms[p2]) {
                        continue;
                    }
                    if (a1.fwd[p1 + 1].intersects(a2.bwd[p2 + 1])) {
                        continue;
                    }
                    CartesianWitness witness;
                    witness.pivot = lang[i1][p1];
                    witness.alpha = slice(lang[i1], 0, p1);
                    witness.beta = slice(lang[i1], p1 + 1, lang[i1].size());
                    witness.gamma = slice(lang[i2], 0, p2);
                    witness.delta = slice(lang[i2], p2 + 1, lang[i2].size());
                    return witness;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace locus
