// inclusion.hpp -- language inclusion, universality, and equivalence for
// NFAs, with an antichain main path and a determinization-based oracle
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

#ifndef LOCUS_INCLUSION_HPP_
#define LOCUS_INCLUSION_HPP_

#include <cstdint>

#include "locus/automata.hpp"
#include "locus/report.hpp"

namespace locus {

enum class InclusionEngine {
    antichain,
    determinize_oracle,
};

struct InclusionConfig {
    InclusionEngine engine = InclusionEngine::antichain;
    std::uint64_t state_pair_cap = kDefaultStatePairCap;
    bool emit_witness = true;
};

/// Does 𝓛(b) ⊆ 𝓛(a) hold? Symbols of b that a does not know are legal and
/// unmatchable (a's side goes empty). A false verdict carries the least
/// word of 𝓛(b)\𝓛(a) in length-then-lexicographic order.
///
/// The antichain engine explores pairs (state of b, subset of states of a)
/// breadth first; a frontier pair (q, S) is dropped when some visited pair
/// (q, S') with S' ⊆ S exists, since any counterexample extension of (q, S)
/// extends (q, S') as well. Throws ResourceLimitError past
/// cfg.state_pair_cap, never a wrong verdict.
CheckReport inclusion(const Nfa& b, const Nfa& a, const InclusionConfig& cfg = {});

/// Is 𝓛(a) all of a.alphabet*? Decided as inclusion of the one-state
/// all-loops automaton in a.
CheckReport universality(const Nfa& a, const InclusionConfig& cfg = {});

/// Language equality, checked as inclusion both ways (a ⊆ b first); the
/// witness comes from the first failing direction.
CheckReport equivalence(const Nfa& a, const Nfa& b, const InclusionConfig& cfg = {});

/// Independent verdict for 𝓛(b) ⊆ 𝓛(a): determinize a over the union
/// alphabet, complete, complement, intersect with b, test emptiness.
/// Throws ResourceLimitError past @p subset_cap.
bool inclusion_oracle(const Nfa& b, const Nfa& a,
                      std::uint64_t subset_cap = kDefaultSubsetCap);

}  // namespace locus

#endif  // LOCUS_INCLUSION_HPP_
