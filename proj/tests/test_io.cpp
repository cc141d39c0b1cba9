// test_io.cpp -- JSON round-trips, golden documents, rejection diagnostics
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

#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include "locus/io.hpp"
#include "support/oracles.hpp"

using namespace locus;

namespace {

/// The documentation example: accepts exactly "ab".
Nfa chain_ab() {
    Alphabet ab = testutil::letters(2);
    return Nfa(ab, 3, {0}, {2}, {{0, Symbol("a"), 1}, {1, Symbol("b"), 2}});
}

LocalSpec ab_star_spec() {
    Alphabet ab = testutil::letters(2);
    const Symbol a("a"), b("b");
    return LocalSpec(ab, {a}, {b}, {{a, b}, {b, a}}, true);
}

void expect_rejection(const char* text, const char* message) {
    const Json j = Json::parse(text);
    CHECK_THROWS_WITH_AS(nfa_from_json(j), message, InputError);
}

}  // namespace

TEST_CASE("automaton documents use the pinned key order") {
    const std::string got = nfa_to_json(chain_ab()).dump();
    CHECK(got ==
          R"({"alphabet":["a","b"],"states":3,"initial":[0],"final":[2],)"
          R"("transitions":[[0,"a",1],[1,"b",2]]})");
}

TEST_CASE("DFA documents carry an integer initial and a trailing flag") {
    Alphabet ab = testutil::letters(2);
    const Dfa d(ab, 2, 0, {1}, {{0, Symbol("a"), 1}, {0, Symbol("b"), 0}});
    const std::string got = dfa_to_json(d).dump();
    CHECK(got ==
          R"({"alphabet":["a","b"],"states":2,"initial":0,"final":[1],)"
          R"("transitions":[[0,"a",1],[0,"b",0]],"deterministic":true})");
    CHECK(dfa_from_json(dfa_to_json(d)) == d);
}

TEST_CASE("automata survive the JSON round trip") {
    std::mt19937_64 rng(33110);
    for (int round = 0; round < 60; ++round) {
        const Nfa a = testutil::random_nfa(rng, 5, 2, 0.3);
        CHECK(nfa_from_json(nfa_to_json(a)) == a);
    }
}

TEST_CASE("a DFA document reads back as an automaton too") {
    Alphabet ab = testutil::letters(2);
    const Dfa d(ab, 2, 0, {1}, {{0, Symbol("a"), 1}, {1, Symbol("b"), 0}});
    const Nfa via_nfa_reader = nfa_from_json(dfa_to_json(d));
    CHECK(via_nfa_reader == to_nfa(d));
}

TEST_CASE("readers name the first violation") {
    expect_rejection(R"([1,2])", "top-level JSON value must be an object");
    expect_rejection(R"({"states":1})", "missing key \"alphabet\"");
    expect_rejection(R"({"alphabet":"ab"})", "\"alphabet\" must be an array of strings");
    expect_rejection(R"({"alphabet":["a b"]})",
                     "alphabet entry 'a b' is not a valid symbol token");
    expect_rejection(R"({"alphabet":["a","a"]})", "duplicate alphabet token 'a'");
    expect_rejection(R"({"alphabet":["a"]})", "missing key \"states\"");
    expect_rejection(R"({"alphabet":["a"],"states":-1})",
                     "\"states\" must be a non-negative integer");
    expect_rejection(R"({"alphabet":["a"],"states":1.5})",
                     "\"states\" must be a non-negative integer");
    expect_rejection(R"({"alphabet":["a"],"states":1,"initial":"x"})",
                     "\"initial\" must be an array of state ids");
    expect_rejection(R"({"alphabet":["a"],"states":1,"initial":[0.5]})",
                     "\"initial\" must be an integer state id");
    expect_rejection(R"({"alphabet":["a"],"states":1,"initial":[-2]})",
                     "\"initial\" state id -2 out of range");
    expect_rejection(
        R"({"alphabet":["a"],"states":1,"initial":[0],"final":[0],"transitions":[[0,"a"]]})",
        "each transition must be [source, symbol, target]");
    expect_rejection(
        R"({"alphabet":["a"],"states":1,"initial":[0],"final":[0],)"
        R"("transitions":[[0,"c",0]]})",
        "transition symbol 'c' not in alphabet");
    expect_rejection(
        R"({"alphabet":["a"],"states":1,"initial":[3],"final":[],"transitions":[]})",
        "initial state 3 out of range (states = 1)");
    expect_rejection(
        R"({"alphabet":["a"],"states":1,"initial":[0],"final":[0],"transitions":[],)"
        R"("deterministic":1})",
        "\"deterministic\" must be a boolean");
}

TEST_CASE("the DFA reader is stricter") {
    const char* base = R"({"alphabet":["a"],"states":2,"initial":[0],"final":[1],)"
                       R"("transitions":[[0,"a",1]],"deterministic":true})";
    CHECK_THROWS_WITH_AS(dfa_from_json(Json::parse(base)),
                         "DFA \"initial\" must be a single state id", InputError);

    const char* unflagged = R"({"alphabet":["a"],"states":2,"initial":0,"final":[1],)"
                            R"("transitions":[[0,"a",1]]})";
    CHECK_THROWS_WITH_AS(dfa_from_json(Json::parse(unflagged)),
                         "a DFA file must set \"deterministic\": true", InputError);

    const char* conflicted = R"({"alphabet":["a"],"states":3,"initial":0,"final":[1],)"
                             R"("transitions":[[0,"a",1],[0,"a",2]],"deterministic":true})";
    CHECK_THROWS_WITH_AS(dfa_from_json(Json::parse(conflicted)),
                         "conflicting transitions from state 0 on symbol 'a'",
                         InputError);
}

TEST_CASE("window specifications round-trip with forbidden windows on disk") {
    const LocalSpec spec = ab_star_spec();
    const std::string got = spec_to_json(spec).dump();
    CHECK(got ==
          R"({"alphabet":["a","b"],"first":["a"],"last":["b"],)"
          R"("forbidden_bigrams":[["a","a"],["b","b"]],"epsilon":true})");
    CHECK(spec_from_json(spec_to_json(spec)) == spec);

    std::mt19937_64 rng(27182);
    for (int round = 0; round < 40; ++round) {
        const LocalSpec random_spec = testutil::random_local_spec(rng, 2 + round % 2);
        CHECK(spec_from_json(spec_to_json(random_spec)) == random_spec);
    }
}

TEST_CASE("window-specification reader diagnostics") {
    CHECK_THROWS_WITH_AS(
        spec_from_json(Json::parse(
            R"({"alphabet":["a"],"first":["a"],"last":["a"],)"
            R"("forbidden_bigrams":[["a","c"]],"epsilon":false})")),
        "forbidden-bigram symbol 'c' not in alphabet", InputError);
    CHECK_THROWS_WITH_AS(
        spec_from_json(Json::parse(
            R"({"alphabet":["a"],"first":["c"],"last":["a"],)"
            R"("forbidden_bigrams":[],"epsilon":false})")),
        "first-letter symbol 'c' not in alphabet", InputError);
    CHECK_THROWS_WITH_AS(
        spec_from_json(Json::parse(
            R"({"alphabet":["a"],"first":["a"],"last":["a"],)"
            R"("forbidden_bigrams":[["a","a","a"]],"epsilon":false})")),
        "each forbidden bigram must be [first, second]", InputError);
    CHECK_THROWS_WITH_AS(
        spec_from_json(Json::parse(
            R"({"alphabet":["a"],"first":[],"last":[],"forbidden_bigrams":[]})")),
        "missing key \"epsilon\"", InputError);

    // Repeated forbidden windows collapse.
    const LocalSpec twice = spec_from_json(Json::parse(
        R"({"alphabet":["a"],"first":["a"],"last":["a"],)"
        R"("forbidden_bigrams":[["a","a"],["a","a"]],"epsilon":false})"));
    CHECK(twice.allowed_bigrams().empty());
}

TEST_CASE("gadget documents append the fresh-symbol roles") {
    Alphabet b_only({Symbol("b")});
    const Nfa seed(b_only, 2, {0}, {1}, {{0, Symbol("b"), 1}});
    const GadgetOutput g = greibach_gadget(seed);
    const Json j = gadget_to_json(g);
    CHECK(j["fresh_symbols"].dump() == R"({"a":"a","h1":"#1","h2":"#2","h3":"#3"})");
    // The automaton part still reads back; the extra key is ignored.
    CHECK(nfa_from_json(j) == g.automaton);
}

TEST_CASE("documents round-trip through files") {
    const std::string path = "/tmp/locus_io_roundtrip.json";
    const Nfa a = chain_ab();
    store_json(path, nfa_to_json(a));
    CHECK(nfa_from_json(load_json(path)) == a);
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    CHECK(text.back() == '\n');
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_json("/tmp/locus_io_missing.json"), InputError);

    const std::string bad = "/tmp/locus_io_bad.json";
    std::ofstream(bad) << "{not json";
    try {
        load_json(bad);
        FAIL("expected a parse failure");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find(bad) == 0);
    }
    std::remove(bad.c_str());
}

TEST_CASE("graphviz export") {
    const std::string got = to_dot(chain_ab());
    CHECK(got ==
          "digraph automaton {\n"
          "  rankdir=LR;\n"
          "  node [shape=circle];\n"
          "  2 [shape=doublecircle];\n"
          "  i0 [shape=point];\n"
          "  i0 -> 0;\n"
          "  0 -> 1 [label=\"a\"];\n"
          "  1 -> 2 [label=\"b\"];\n"
          "}\n");

    Alphabet ab = testutil::letters(2);
    const Nfa merged(ab, 2, {0}, {1}, {{0, Symbol("a"), 1}, {0, Symbol("b"), 1}});
    CHECK(to_dot(merged).find("0 -> 1 [label=\"a, b\"];") != std::string::npos);

    Alphabet quoted({Symbol("\""), Symbol("\\")});
    const Nfa tricky(quoted, 1, {0}, {0}, {{0, Symbol("\""), 0}, {0, Symbol("\\"), 0}});
    CHECK(to_dot(tricky).find("[label=\"\\\", \\\\\"]") != std::string::npos);
}

TEST_CASE("witness words render as token arrays") {
    CHECK(word_to_json({}).dump() == "[]");
    Word w{Symbol("a"), Symbol("#1")};
    CHECK(word_to_json(w).dump() == R"(["a","#1"])");
}
