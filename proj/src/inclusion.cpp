// inclusion.cpp
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

#include "locus/inclusion.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace locus {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

constexpr std::uint32_t kNoParent = 0xFFFFFFFFu;

struct PairNode {
    StateId q;          // state of b
    StateSet set;       // subset of a's states
    std::uint32_t parent;
    std::uint32_t sym;  // index into b's alphabet, taken from the parent
};

Word path_word(const std::vector<PairNode>& nodes, std::uint32_t id,
               const Alphabet& alphabet) {
    Word word;
    while (nodes[id].parent != kNoParent) {
        word.push_back(alphabet.at(nodes[id].sym));
        id = nodes[id].parent;
    }
    std::reverse(word.begin(), word.end());
    return word;
}

// Breadth-first search over pairs (state of b, subset of a's states) with
// antichain pruning: a fresh pair (q, S) is dropped when a visited (q, S')
// with S' ⊆ S exists, since every counterexample extension of (q, S) also
// extends (q, S').
//
// Pairs are generated in length-then-lexicographic order of their path
// words: each level is partitioned into groups of equal path words, and a
// group expands symbol-major. Every visited pair therefore carries a path
// word no larger than any newcomer it could prune, which makes the first
// counterexample pair encountered the least witness overall. Counterexample
// detection runs before pruning so the least witness cannot be shadowed.
CheckReport antichain_inclusion(const Nfa& b, const Nfa& a, const InclusionConfig& cfg) {
    const auto start = Clock::now();

    // b's symbol indexes translated to a's; absent means unmatchable.
    std::vector<std::optional<std::size_t>> sym_map(b.alphabet().size());
    for (std::size_t s = 0; s < b.alphabet().size(); ++s) {
        sym_map[s] = a.alphabet().index_of(b.alphabet().at(s));
    }

    std::vector<PairNode> nodes;
    std::vector<std::vector<std::uint32_t>> visited(b.state_count());
    std::uint64_t kept = 0;
    std::optional<std::uint32_t> bad;

    const auto add = [&](StateId q, StateSet&& set, std::uint32_t parent,
                         std::uint32_t sym) -> std::optional<std::uint32_t> {
        const auto id = static_cast<std::uint32_t>(nodes.size());
        if (b.is_final(q) && !set.intersects(a.final_set())) {
            nodes.push_back({q, std::move(set), parent, sym});
            bad = id;
            return std::nullopt;
        }
        for (std::uint32_t seen : visited[q]) {
            if (nodes[seen].set.is_subset_of(set)) {
                return std::nullopt;  // dominated; the smaller subset fails first
            }
        }
        if (kept >= cfg.state_pair_cap) {
            throw ResourceLimitError("inclusion check exceeded the state-pair cap of " +
                                     std::to_string(cfg.state_pair_cap));
        }
        kept += 1;
        nodes.push_back({q, std::move(set), parent, sym});
        visited[q].push_back(id);
        return id;
    };

    // One group per distinct path word, groups in word order.
    std::vector<std::vector<std::uint32_t>> level;
    level.emplace_back();
    for (StateId q : b.initial()) {
        StateSet root = a.initial_set();
        const auto id = add(q, std::move(root), kNoParent, 0);
        if (bad) {
            break;
        }
        if (id) {
            level.back().push_back(*id);
        }
    }

    while (!bad) {
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& group : level) {
            for (std::uint32_t s = 0; s < b.alphabet().size() && !bad; ++s) {
                std::vector<std::uint32_t> children;
                for (std::uint32_t id : group) {
                    const StateSet image =
                        sym_map[s] ? a.post_set(nodes[id].set, *sym_map[s])
                                   : StateSet(a.state_count());
                    for (StateId qb : b.post(nodes[id].q, s)) {
                        StateSet copy = image;
                        const auto child = add(qb, std::move(copy), id, s);
                        if (bad) {
                            break;
                        }
                        if (child) {
                            children.push_back(*child);
                        }
                    }
                    if (bad) {
                        break;
                    }
                }
                if (!children.empty()) {
                    next.push_back(std::move(children));
                }
            }
            if (bad) {
                break;
            }
        }
        if (next.empty()) {
            break;
        }
        level = std::move(next);
    }

    CheckReport report;
    report.verdict = !bad.has_value();
    if (bad && cfg.emit_witness) {
        report.witness = path_word(nodes, *bad, b.alphabet());
    }
    report.stats.explored = kept;
    report.stats.elapsed_ms = ms_since(start);
    return report;
}

Nfa complement_via_subsets(const Nfa& a, std::uint64_t subset_cap) {
    const Dfa total = complete(determinize(a, subset_cap));
    std::vector<StateId> flipped;
    for (StateId q = 0; q < total.state_count(); ++q) {
        if (!total.is_final(q)) {
            flipped.push_back(q);
        }
    }
    return to_nfa(Dfa(total.alphabet(), total.state_count(), total.initial(),
                      std::move(flipped), total.transitions()));
}

CheckReport oracle_inclusion(const Nfa& b, const Nfa& a, const InclusionConfig& cfg) {
    const auto start = Clock::now();
    const Alphabet shared = alphabet_union(b.alphabet(), a.alphabet());
    const Nfa wide_b = with_alphabet(b, shared);
    const Nfa wide_a = with_alphabet(a, shared);
    const Nfa gap = product_intersection(wide_b, complement_via_subsets(wide_a, cfg.state_pair_cap));

    CheckReport report;
    const auto witness = shortest_word(gap);
    report.verdict = !witness.has_value();
    if (witness && cfg.emit_witness) {
        report.witness = witness;
    }
    report.stats.explored = gap.state_count();
    report.stats.elapsed_ms = ms_since(start);
    return report;
}

}  // namespace

CheckReport inclusion(const Nfa& b, const Nfa& a, const InclusionConfig& cfg) {
    if (cfg.engine == InclusionEngine::determinize_oracle) {
        return oracle_inclusion(b, a, cfg);
    }
    return antichain_inclusion(b, a, cfg);
}

CheckReport universality(const Nfa& a, const InclusionConfig& cfg) {
    std::vector<Trans> loops;
    for (const Symbol& sym : a.alphabet().symbols()) {
        loops.push_back({0, sym, 0});
    }
    const Nfa everything(a.alphabet(), 1, {0}, {0}, std::move(loops));
    return inclusion(everything, a, cfg);
}

CheckReport equivalence(const Nfa& a, const Nfa& b, const InclusionConfig& cfg) {
    CheckReport forward = inclusion(a, b, cfg);
    if (!forward.verdict) {
        return forward;
    }
    CheckReport backward = inclusion(b, a, cfg);
    backward.stats.explored += forward.stats.explored;
    backward.stats.elapsed_ms += forward.stats.elapsed_ms;
    return backward;
}

bool inclusion_oracle(const Nfa& b, const Nfa& a, std::uint64_t subset_cap) {
    const Alphabet shared = alphabet_union(b.alphabet(), a.alphabet());
    const Nfa wide_b = with_alphabet(b, shared);
    const Nfa wide_a = with_alphabet(a, shared);
    return is_empty(product_intersection(wide_b, complement_via_subsets(wide_a, subset_cap)));
}

}  // namespace locus
