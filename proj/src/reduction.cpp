// reduction.cpp
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

#include "locus/reduction.hpp"

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "locus/local.hpp"

namespace locus {

namespace {

/// Picks a token equal to base, or base + "_g1", "_g2", ... on collision
/// with the seed alphabet or an already chosen token.
Symbol fresh_token(const std::string& base, const Alphabet& taken,
                   const std::vector<Symbol>& chosen) {
    auto clashes = [&](const std::string& token) {
        if (taken.contains(Symbol(token))) return true;
        for (const Symbol& sym : chosen) {
            if (sym.token == token) return true;
        }
        return false;
    };
    std::string candidate = base;
    for (unsigned suffix = 1; clashes(candidate); ++suffix) {
        candidate = base + "_g" + std::to_string(suffix);
    }
    return Symbol(candidate);
}

/// States reachable from `seeds` by one or more steps, following the
/// transition relation forwards or backwards.
StateSet reach_after_step(const Nfa& a, const StateSet& seeds, bool forward) {
    const std::size_t syms = a.alphabet().size();
    auto image = [&](const StateSet& from) {
        StateSet out(a.state_count());
        for (std::size_t s = 0; s < syms; ++s) {
            out |= forward ? a.post_set(from, s) : a.pre_set(from, s);
        }
        return out;
    };
    StateSet reached = image(seeds);
    StateSet frontier = reached;
    while (frontier.any()) {
        StateSet next = image(frontier);
        frontier = StateSet(a.state_count());
        next.for_each([&](StateId q) {
            if (!reached.test(q)) {
                reached.set(q);
                frontier.set(q);
            }
        });
    }
    return reached;
}

/// Accepts exactly the strict infixes of 𝓛(a): words u with v u v' ∈ 𝓛(a)
/// for some v, v' that are not both empty. Two copies of a's state space,
/// the second one marking that the surrounding word is strictly longer.
Nfa strict_infix_automaton(const Nfa& a) {
    const StateId n = a.state_count();
    auto id = [n](StateId q, StateId moved) { return q + moved * n; };

    StateSet coreach_any = a.final_set();
    coreach_any |= reach_after_step(a, a.final_set(), /*forward=*/false);
    StateSet reach_one = reach_after_step(a, a.initial_set(), /*forward=*/true);
    StateSet coreach_one = reach_after_step(a, a.final_set(), /*forward=*/false);

    std::vector<StateId> initial;
    a.initial_set().for_each([&](StateId q) { initial.push_back(id(q, 0)); });
    reach_one.for_each([&](StateId q) { initial.push_back(id(q, 1)); });

    std::vector<StateId> final_states;
    coreach_one.for_each([&](StateId q) { final_states.push_back(id(q, 0)); });
    coreach_any.for_each([&](StateId q) { final_states.push_back(id(q, 1)); });

    std::vector<Trans> transitions;
    transitions.reserve(a.transitions().size() * 2);
    for (const Trans& t : a.transitions()) {
        transitions.push_back({id(t.src, 0), t.sym, id(t.dst, 0)});
        transitions.push_back({id(t.src, 1), t.sym, id(t.dst, 1)});
    }

    return Nfa(a.alphabet(), 2 * n, std::move(initial), std::move(final_states),
               std::move(transitions));
}

}  // namespace

GadgetOutput greibach_gadget(const Nfa& seed) {
    if (is_empty(seed)) {
        throw InputError("reduction invalid on empty seed");
    }

    std::vector<Symbol> chosen;
    for (const char* base : {"a", "#1", "#2", "#3"}) {
        chosen.push_back(fresh_token(base, seed.alphabet(), chosen));
    }
    GadgetSymbols fresh{chosen[0], chosen[1], chosen[2], chosen[3]};

    std::vector<Symbol> letters = seed.alphabet().symbols();
    letters.insert(letters.end(), chosen.begin(), chosen.end());
    Alphabet alphabet(std::move(letters));

    const StateId n = seed.state_count();
    const StateId s0 = n, s1 = n + 1;
    const StateId u1 = n + 2, u2 = n + 3, u3 = n + 4, u4 = n + 5;
    const StateId qf = n + 6;

    std::vector<Trans> transitions = seed.transitions();
    auto add = [&](StateId src, const Symbol& sym, StateId dst) {
        transitions.push_back({src, sym, dst});
    };
    add(s0, fresh.open, s1);
    add(s0, fresh.open, u1);
    add(s1, fresh.pad, s1);
    seed.initial_set().for_each([&](StateId q) { add(s1, fresh.mid, q); });
    seed.final_set().for_each([&](StateId q) { add(q, fresh.close, qf); });
    add(u1, fresh.pad, u2);
    add(u2, fresh.pad, u3);
    add(u3, fresh.mid, u4);
    for (const Symbol& sym : seed.alphabet().symbols()) add(u4, sym, u4);
    add(u4, fresh.close, qf);

    Nfa automaton(alphabet, n + 7, {s0}, {qf}, std::move(transitions));
    return GadgetOutput{std::move(automaton), std::move(fresh), seed.alphabet()};
}

CheckReport is_infix_free(const Nfa& a) {
    const auto start = std::chrono::steady_clock::now();
    Nfa leak = product_intersection(a, strict_infix_automaton(a));
    CheckReport report;
    report.verdict = is_empty(leak);
    if (!report.verdict) report.witness = shortest_word(leak);
    report.stats.explored = leak.state_count();
    report.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

ReductionSummary verify_reduction(const Nfa& seed, const InclusionConfig& cfg) {
    GadgetOutput gadget = greibach_gadget(seed);
    ReductionSummary summary;
    summary.universal = universality(seed, cfg).verdict;
    summary.gadget_local = is_local_nfa(gadget.automaton, cfg).verdict;
    summary.gadget_infix_free = is_infix_free(gadget.automaton).verdict;
    summary.consistent =
        summary.universal == summary.gadget_local && summary.gadget_infix_free;
    return summary;
}

}  // namespace locus
