// test_reduction.cpp -- gadget construction, infix-freeness, consistency
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "locus/local.hpp"
#include "locus/reduction.hpp"
#include "support/oracles.hpp"

using namespace locus;

namespace {

Word toks(std::initializer_list<const char*> tokens) {
    Word w;
    for (const char* t : tokens) w.emplace_back(t);
    return w;
}

/// 𝓛 = {b}*, universal over its one-letter alphabet.
Nfa star_b() {
    Alphabet ab({Symbol("b")});
    return Nfa(ab, 1, {0}, {0}, {{0, Symbol("b"), 0}});
}

/// 𝓛 = {b}.
Nfa just_b() {
    Alphabet ab({Symbol("b")});
    return Nfa(ab, 2, {0}, {1}, {{0, Symbol("b"), 1}});
}

/// 𝓛 = {ab, ba}.
Nfa ab_or_ba() {
    Alphabet ab({Symbol("a"), Symbol("b")});
    return Nfa(ab, 4, {0}, {3},
               {{0, Symbol("a"), 1},
                {1, Symbol("b"), 3},
                {0, Symbol("b"), 2},
                {2, Symbol("a"), 3}});
}

/// 𝓛 = {a, aa}.
Nfa a_or_aa() {
    Alphabet ab({Symbol("a")});
    return Nfa(ab, 3, {0}, {1, 2}, {{0, Symbol("a"), 1}, {1, Symbol("a"), 2}});
}

/// Membership in the wrapped language, straight from its definition:
/// open, then either pads and a seed word after the mid marker or exactly
/// two pads and any seed-alphabet word, then close.
bool wrapped_by_definition(const Nfa& seed, const GadgetOutput& g, const Word& w) {
    if (w.size() < 2 || w.front() != g.fresh_symbols.open ||
        w.back() != g.fresh_symbols.close) {
        return false;
    }
    const Word middle(w.begin() + 1, w.end() - 1);
    const auto mid_at = std::find(middle.begin(), middle.end(), g.fresh_symbols.mid);
    if (mid_at == middle.end()) {
        return false;
    }
    const Word pads(middle.begin(), mid_at);
    const Word rest(mid_at + 1, middle.end());
    for (const Symbol& s : pads) {
        if (s != g.fresh_symbols.pad) return false;
    }
    for (const Symbol& s : rest) {
        if (!g.seed_alphabet.contains(s)) return false;
    }
    return pads.size() == 2 || testutil::oracle_accepts(seed, rest);
}

}  // namespace

TEST_CASE("gadget has seven extra states and the four default fresh letters") {
    const Nfa seed = ab_or_ba();
    const GadgetOutput g = greibach_gadget(seed);
    CHECK(g.automaton.state_count() == seed.state_count() + 7);
    CHECK(g.fresh_symbols.pad.token == "a_g1");  // seed already uses "a"
    CHECK(g.fresh_symbols.open.token == "#1");
    CHECK(g.fresh_symbols.mid.token == "#2");
    CHECK(g.fresh_symbols.close.token == "#3");
    CHECK(g.seed_alphabet == seed.alphabet());
    for (const Symbol& s : seed.alphabet().symbols()) {
        CHECK(g.automaton.alphabet().contains(s));
    }
    CHECK(g.automaton.alphabet().size() == seed.alphabet().size() + 4);

    const GadgetOutput h = greibach_gadget(just_b());
    CHECK(h.fresh_symbols.pad.token == "a");
}

TEST_CASE("gadget of a universal seed is local") {
    const GadgetOutput g = greibach_gadget(star_b());
    CHECK(is_local_nfa(g.automaton).verdict);
    CHECK(accepts(g.automaton, toks({"#1", "#2", "#3"})));
    CHECK(accepts(g.automaton, toks({"#1", "a", "#2", "b", "b", "#3"})));
    CHECK(accepts(g.automaton, toks({"#1", "a", "a", "#2", "b", "#3"})));
    CHECK_FALSE(accepts(g.automaton, toks({"#2", "#1", "#3"})));
    CHECK_FALSE(accepts(g.automaton, toks({"#1", "#2", "#3", "#3"})));
}

TEST_CASE("gadget of a non-universal seed is not local") {
    const GadgetOutput g = greibach_gadget(just_b());

    // Both branches contribute, so all two-letter windows of the missing
    // word occur in accepted words even though the word itself does not.
    CHECK(accepts(g.automaton, toks({"#1", "#2", "b", "#3"})));
    CHECK(accepts(g.automaton, toks({"#1", "a", "a", "#2", "#3"})));
    CHECK_FALSE(accepts(g.automaton, toks({"#1", "#2", "#3"})));

    const CheckReport report = is_local_nfa(g.automaton);
    CHECK_FALSE(report.verdict);
    REQUIRE(report.witness.has_value());
    CHECK(*report.witness == toks({"#1", "#2", "#3"}));
}

TEST_CASE("gadget rejects an empty seed") {
    Alphabet ab({Symbol("b")});
    const Nfa no_finals(ab, 1, {0}, {}, {{0, Symbol("b"), 0}});
    CHECK_THROWS_WITH_AS(greibach_gadget(no_finals), "reduction invalid on empty seed",
                         InputError);
}

TEST_CASE("fresh letters dodge seed letters by suffixing") {
    Alphabet ab({Symbol("a"), Symbol("#2")});
    std::vector<Trans> loops;
    for (const Symbol& s : ab.symbols()) loops.push_back({0, s, 0});
    const Nfa seed(ab, 1, {0}, {0}, std::move(loops));

    const GadgetOutput g = greibach_gadget(seed);
    CHECK(g.fresh_symbols.pad.token == "a_g1");
    CHECK(g.fresh_symbols.open.token == "#1");
    CHECK(g.fresh_symbols.mid.token == "#2_g1");
    CHECK(g.fresh_symbols.close.token == "#3");
    CHECK(g.automaton.alphabet().size() == 6);

    const ReductionSummary summary = verify_reduction(seed);
    CHECK(summary.universal);
    CHECK(summary.gadget_local);
    CHECK(summary.consistent);
}

TEST_CASE("gadget language matches its definition word for word") {
    std::mt19937_64 rng(61414);
    std::vector<Nfa> seeds{star_b(), just_b(), ab_or_ba(), a_or_aa()};
    for (int round = 0; round < 12; ++round) {
        seeds.push_back(testutil::random_nonempty_nfa(rng, 3, 2, 0.3));
    }
    for (const Nfa& seed : seeds) {
        const GadgetOutput g = greibach_gadget(seed);
        const std::vector<Word> got = enumerate(g.automaton, 6);
        std::vector<Word> want;
        for (const Word& w : testutil::all_words(g.automaton.alphabet(), 6)) {
            if (wrapped_by_definition(seed, g, w)) want.push_back(w);
        }
        REQUIRE(got == want);
    }
}

TEST_CASE("infix-freeness on worked examples") {
    SUBCASE("a word strictly inside a longer one is found") {
        const CheckReport report = is_infix_free(a_or_aa());
        CHECK_FALSE(report.verdict);
        REQUIRE(report.witness.has_value());
        CHECK(*report.witness == toks({"a"}));
    }
    SUBCASE("two words of equal length never embed strictly") {
        CHECK(is_infix_free(ab_or_ba()).verdict);
    }
    SUBCASE("the empty word inside any other accepted word") {
        const CheckReport report = is_infix_free(star_b());
        CHECK_FALSE(report.verdict);
        REQUIRE(report.witness.has_value());
        CHECK(report.witness->empty());
    }
    SUBCASE("a singleton language is infix-free") {
        CHECK(is_infix_free(just_b()).verdict);
    }
    SUBCASE("the empty language is infix-free") {
        Alphabet ab({Symbol("b")});
        const Nfa none(ab, 1, {0}, {}, {});
        CHECK(is_infix_free(none).verdict);
    }
}

TEST_CASE("every gadget output is infix-free") {
    std::mt19937_64 rng(70422);
    for (int round = 0; round < 40; ++round) {
        const Nfa seed = testutil::random_nonempty_nfa(rng, 4, 2, 0.3);
        CHECK(is_infix_free(greibach_gadget(seed).automaton).verdict);
    }
}

TEST_CASE("infix-freeness agrees with the bounded brute-force search") {
    std::mt19937_64 rng(90807);
    const std::size_t bound = 7;
    int refuted = 0;
    for (int round = 0; round < 150; ++round) {
        const Nfa a = testutil::random_nfa(rng, 4, 2, 0.25);
        const CheckReport report = is_infix_free(a);
        const auto brute = testutil::brute_strict_infix_witness(a, bound);

        if (brute.has_value()) {
            CHECK_FALSE(report.verdict);
        }
        if (report.verdict) {
            CHECK_FALSE(brute.has_value());
        } else {
            ++refuted;
            REQUIRE(report.witness.has_value());
            const Word& w = *report.witness;
            // The witness is accepted and occurs strictly inside another
            // accepted word, checked through an independent acceptor.
            CHECK(testutil::oracle_accepts(a, w));
            const Nfa super = testutil::strict_superword_acceptor(a.alphabet(), w);
            CHECK_FALSE(is_empty(product_intersection(a, super)));
            // It is least, so no brute result can precede it.
            if (brute.has_value()) {
                CHECK_FALSE(length_lex_less(*brute, w));
            }
        }
    }
    CHECK(refuted > 20);
}

TEST_CASE("reduction summary ties universality to gadget locality") {
    SUBCASE("universal seed") {
        const ReductionSummary s = verify_reduction(star_b());
        CHECK(s.universal);
        CHECK(s.gadget_local);
        CHECK(s.gadget_infix_free);
        CHECK(s.consistent);
    }
    SUBCASE("non-universal seeds") {
        for (const Nfa& seed : {just_b(), ab_or_ba(), a_or_aa()}) {
            const ReductionSummary s = verify_reduction(seed);
            CHECK_FALSE(s.universal);
            CHECK_FALSE(s.gadget_local);
            CHECK(s.gadget_infix_free);
            CHECK(s.consistent);
        }
    }
    SUBCASE("random seeds stay consistent") {
        std::mt19937_64 rng(51501);
        for (int round = 0; round < 60; ++round) {
            const Nfa seed = testutil::random_nonempty_nfa(rng, 4, 2, 0.3);
            CHECK(verify_reduction(seed).consistent);
        }
    }
}
