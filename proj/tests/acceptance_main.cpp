// acceptance_main.cpp -- end-to-end checks of the toolkit's headline
// guarantees, one pass/fail line per criterion
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
// Each criterion runs against deterministic seeds, prints one line, and the
// binary exits nonzero if any line reads FAIL.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "locus/automata.hpp"
#include "locus/inclusion.hpp"
#include "locus/local.hpp"
#include "locus/reduction.hpp"
#include "locus/regex.hpp"
#include "support/oracles.hpp"

using namespace locus;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

int failures = 0;

void report(const char* id, const Outcome& outcome) {
    std::cout << id << (outcome.passed ? " pass" : " FAIL") << " ("
              << outcome.detail << ")" << std::endl;
    if (!outcome.passed) {
        ++failures;
    }
}

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// Corpus shared by the reduction, closure, oracle, and inclusion criteria:
// small nonempty NFAs across alphabet sizes 1 to 3.
std::vector<Nfa> build_corpus(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<StateId> states(1, 6);
    std::uniform_int_distribution<std::size_t> symbols(1, 3);
    std::uniform_real_distribution<double> density(0.1, 0.5);
    std::vector<Nfa> corpus;
    corpus.reserve(count);
    while (corpus.size() < count) {
        corpus.push_back(
            testutil::random_nonempty_nfa(rng, states(rng), symbols(rng), density(rng)));
    }
    return corpus;
}

Word joined(const Word& left, const Symbol& pivot, const Word& right) {
    Word w = left;
    w.push_back(pivot);
    w.insert(w.end(), right.begin(), right.end());
    return w;
}

// Least word of 𝓛(b)\𝓛(a) up to the bound, with membership in a decided by
// the path-search oracle rather than the production engines.
std::optional<Word> least_difference(const Nfa& b, const Nfa& a, std::size_t bound) {
    for (const Word& w : enumerate(b, bound)) {
        if (!testutil::oracle_accepts(a, w)) {
            return w;
        }
    }
    return std::nullopt;
}

Outcome criterion_reduction_corpus(const std::vector<Nfa>& corpus) {
    std::size_t consistent = 0;
    const double t0 = now_ms();
    for (const Nfa& seed : corpus) {
        if (verify_reduction(seed).consistent) {
            ++consistent;
        }
    }
    std::ostringstream detail;
    detail << consistent << "/" << corpus.size() << " seeds consistent, "
           << static_cast<int>(now_ms() - t0) << " ms";
    return {consistent == corpus.size(), detail.str()};
}

Outcome criterion_worked_instances() {
    const Alphabet b_only({Symbol("b")});
    const Symbol b_sym("b");
    const Nfa universal(b_only, 1, {0}, {0}, {{0, b_sym, 0}});
    const Nfa just_b(b_only, 2, {0}, {1}, {{0, b_sym, 1}});

    bool ok = is_local_nfa(greibach_gadget(universal).automaton).verdict;

    const GadgetOutput gadget = greibach_gadget(just_b);
    const CheckReport rep = is_local_nfa(gadget.automaton);
    ok = ok && !rep.verdict && rep.witness.has_value();
    if (rep.witness) {
        const Dfa closed = local_closure(gadget.automaton);
        ok = ok && accepts(closed, *rep.witness);
        ok = ok && !testutil::oracle_accepts(gadget.automaton, *rep.witness);
    }

    const Symbol pad = gadget.fresh_symbols.pad;
    const Symbol open = gadget.fresh_symbols.open;
    const Symbol mid = gadget.fresh_symbols.mid;
    const Symbol close = gadget.fresh_symbols.close;
    const Word member_one{open, mid, b_sym, close};
    const Word member_two{open, pad, pad, mid, close};
    const Word non_member{open, mid, close};
    ok = ok && testutil::oracle_accepts(gadget.automaton, member_one);
    ok = ok && testutil::oracle_accepts(gadget.automaton, member_two);
    ok = ok && !testutil::oracle_accepts(gadget.automaton, non_member);
    return {ok, "universal and singleton seeds plus the three proof words"};
}

Outcome criterion_closure_laws(const std::vector<Nfa>& corpus) {
    std::size_t good = 0;
    for (const Nfa& a : corpus) {
        const Nfa closed = to_nfa(local_closure(a));
        const std::vector<Word> lang = enumerate(a, 8);
        const std::vector<Word> closed_lang = enumerate(closed, 8);
        const bool contained =
            std::includes(closed_lang.begin(), closed_lang.end(), lang.begin(),
                          lang.end(), length_lex_less);
        const bool idempotent =
            equivalence(closed, to_nfa(local_closure(closed))).verdict;
        if (contained && idempotent) {
            ++good;
        }
    }
    std::ostringstream detail;
    detail << good << "/" << corpus.size()
           << " containment at bound 8 and closure idempotence";
    return {good == corpus.size(), detail.str()};
}

Outcome criterion_oracle_agreement(const std::vector<Nfa>& corpus) {
    std::size_t good = 0;
    for (const Nfa& a : corpus) {
        const std::optional<CartesianWitness> violation = cartesian_oracle(a, 8);
        const CheckReport rep = is_local_nfa(a);
        bool ok = !(violation.has_value() && rep.verdict);
        if (violation) {
            ok = ok &&
                 testutil::oracle_accepts(
                     a, joined(violation->alpha, violation->pivot, violation->beta));
            ok = ok &&
                 testutil::oracle_accepts(
                     a, joined(violation->gamma, violation->pivot, violation->delta));
            ok = ok &&
                 !testutil::oracle_accepts(
                     a, joined(violation->alpha, violation->pivot, violation->delta));
        }
        if (!rep.verdict) {
            ok = ok && rep.witness.has_value();
            if (rep.witness) {
                ok = ok && accepts(local_closure(a), *rep.witness);
                ok = ok && !testutil::oracle_accepts(a, *rep.witness);
            }
        }
        if (ok) {
            ++good;
        }
    }
    std::ostringstream detail;
    detail << good << "/" << corpus.size()
           << " exchange scan vs verdict, counterexamples re-verified";
    return {good == corpus.size(), detail.str()};
}

Outcome criterion_dfa_fast_path(const std::vector<Nfa>& corpus) {
    std::size_t good = 0;
    bool pure = true;
    for (const Nfa& a : corpus) {
        const bool nfa_verdict = is_local_nfa(a).verdict;
        const Dfa d = determinize(a);
        const std::uint64_t before = internal::determinize_calls.load();
        const bool dfa_verdict = is_local_dfa(d).verdict;
        if (internal::determinize_calls.load() != before) {
            pure = false;
        }
        if (nfa_verdict == dfa_verdict) {
            ++good;
        }
    }
    std::ostringstream detail;
    detail << good << "/" << corpus.size() << " verdicts agree, determinizer "
           << (pure ? "untouched" : "INVOKED") << " on the DFA route";
    return {good == corpus.size() && pure, detail.str()};
}

Outcome criterion_inclusion_engines(const std::vector<Nfa>& corpus,
                                    std::size_t rounds, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
    InclusionConfig oracle_cfg;
    oracle_cfg.engine = InclusionEngine::determinize_oracle;
    std::size_t good = 0;
    for (std::size_t round = 0; round < rounds; ++round) {
        const Nfa& b = corpus[pick(rng)];
        const Nfa& a = corpus[pick(rng)];
        const CheckReport fast = inclusion(b, a);
        const CheckReport slow = inclusion(b, a, oracle_cfg);
        bool ok = fast.verdict == slow.verdict;
        if (!fast.verdict) {
            ok = ok && fast.witness.has_value() && slow.witness.has_value();
            const std::optional<Word> brute = least_difference(b, a, 8);
            if (ok && brute) {
                ok = *fast.witness == *brute && slow.witness->size() == brute->size();
            } else if (ok) {
                // No difference below length 9, so the shortest one is longer.
                ok = fast.witness->size() > 8 && slow.witness->size() > 8;
            }
        }
        if (ok) {
            ++good;
        }
    }
    std::ostringstream detail;
    detail << good << "/" << rounds
           << " ordered pairs agree with shortest witnesses";
    return {good == rounds, detail.str()};
}

std::shared_ptr<const RegexNode> random_regex(std::mt19937_64& rng,
                                              const Alphabet& alphabet, int depth) {
    std::uniform_int_distribution<int> shape(0, depth == 0 ? 3 : 6);
    std::uniform_int_distribution<std::size_t> letter(0, alphabet.size() - 1);
    switch (shape(rng)) {
        case 0:
            return make_empty();
        case 1:
            return make_epsilon();
        case 2:
        case 3:
            return make_literal(alphabet.symbols()[letter(rng)]);
        case 4:
            return make_concat(random_regex(rng, alphabet, depth - 1),
                               random_regex(rng, alphabet, depth - 1));
        case 5:
            return make_union(random_regex(rng, alphabet, depth - 1),
                              random_regex(rng, alphabet, depth - 1));
        default:
            return make_star(random_regex(rng, alphabet, depth - 1));
    }
}

std::size_t count_literals(const std::shared_ptr<const RegexNode>& node) {
    if (!node) {
        return 0;
    }
    return (node->kind == RegexKind::literal ? 1 : 0) + count_literals(node->left) +
           count_literals(node->right);
}

Outcome criterion_position_automata(std::size_t rounds, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Alphabet alphabet = testutil::letters(2);
    std::size_t good = 0;
    for (std::size_t round = 0; round < rounds; ++round) {
        const RegexAst r{random_regex(rng, alphabet, 5), alphabet};
        const Nfa position = glushkov(r);
        const Nfa marked = marked_automaton(r);
        const std::size_t literals = count_literals(r.root);
        bool ok = enumerate(position, 6) == regex_semantics_enumerate(r, 6);
        ok = ok && position.state_count() == literals + 1;
        ok = ok && marked.state_count() == literals + 1;
        ok = ok && is_local_nfa(marked).verdict;
        if (ok) {
            ++good;
        }
    }
    std::ostringstream detail;
    detail << good << "/" << rounds
           << " regexes: semantics at bound 6, marked locality, state law";
    return {good == rounds, detail.str()};
}

Outcome criterion_window_semantics(std::size_t rounds, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> symbols(1, 3);
    std::size_t good = 0;
    for (std::size_t round = 0; round < rounds; ++round) {
        const LocalSpec spec = testutil::random_local_spec(rng, symbols(rng));
        const testutil::WordProfile profile = testutil::profile_from_spec(spec);
        std::vector<Word> expected;
        for (const Word& w : testutil::all_words(spec.alphabet(), 6)) {
            if (testutil::profile_accepts(profile, w)) {
                expected.push_back(w);
            }
        }
        if (enumerate(to_nfa(spec_to_dfa(spec)), 6) == expected) {
            ++good;
        }
    }
    std::ostringstream detail;
    detail << good << "/" << rounds << " window specifications match the formula";
    return {good == rounds, detail.str()};
}

Outcome criterion_scaling(std::size_t rounds, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double densities[] = {0.05, 0.10, 0.20};
    std::vector<double> elapsed;
    std::size_t limited = 0;
    for (std::size_t round = 0; round < rounds; ++round) {
        const Nfa a = testutil::random_nfa(rng, 50, 4, densities[round % 3]);
        const double t0 = now_ms();
        try {
            is_local_nfa(a);
        } catch (const ResourceLimitError&) {
            ++limited;
        }
        elapsed.push_back(now_ms() - t0);
    }
    std::sort(elapsed.begin(), elapsed.end());
    const double median = elapsed[elapsed.size() / 2];
    std::ostringstream detail;
    detail << "median " << static_cast<int>(median) << " ms over " << rounds
           << " automata of 50 states, " << limited << " capped";
    return {median < 10'000.0, detail.str()};
}

}  // namespace

int main() {
    const std::vector<Nfa> corpus = build_corpus(500, 0xace0'1001);

    report("R-1", criterion_reduction_corpus(corpus));
    report("R-2", criterion_worked_instances());
    report("R-3", criterion_closure_laws(corpus));
    report("R-4", criterion_oracle_agreement(corpus));
    report("R-5", criterion_dfa_fast_path(corpus));
    report("R-6", criterion_inclusion_engines(corpus, 2000, 0xace0'1006));
    report("R-7", criterion_position_automata(200, 0xace0'1007));
    report("R-8", criterion_window_semantics(200, 0xace0'1008));
    report("R-9", criterion_scaling(11, 0xace0'1009));

    if (failures != 0) {
        std::cout << failures << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
