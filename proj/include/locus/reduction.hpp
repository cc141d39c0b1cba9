// reduction.hpp -- hard-instance gadget, infix-freeness, and the
// round-trip consistency check tying universality to locality
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
// The gadget wraps a seed language L over Σ into
//
//     #₁ ( a* #₂ L  +  a a #₂ Σ* ) #₃
//
// over Σ extended with four fresh letters. The wrapped language is local
// exactly when L is all of Σ*, which turns any universality question into
// a locality question and makes locality testing for NFAs PSPACE-hard.

#ifndef LOCUS_REDUCTION_HPP_
#define LOCUS_REDUCTION_HPP_

#include "locus/automata.hpp"
#include "locus/inclusion.hpp"
#include "locus/report.hpp"

namespace locus {

/// The four letters the gadget adds, named by role: pad is the letter
/// looped in front of the middle marker; open, mid, and close delimit the
/// wrapped word.
struct GadgetSymbols {
    Symbol pad;
    Symbol open;
    Symbol mid;
    Symbol close;
};

struct GadgetOutput {
    Nfa automaton;
    GadgetSymbols fresh_symbols;
    Alphabet seed_alphabet;
};

/// Builds the wrapped automaton over seed.alphabet plus four fresh letters,
/// with state_count(seed) + 7 states. Default fresh tokens are "a", "#1",
/// "#2", "#3"; tokens the seed already uses get a "_g1", "_g2", ... suffix
/// until fresh. Throws InputError when 𝓛(seed) = ∅ ("reduction invalid on
/// empty seed"); run is_empty first.
GadgetOutput greibach_gadget(const Nfa& seed);

/// Is no word of 𝓛(a) a strict infix of another word of 𝓛(a)? Decided by
/// intersecting a with its strict-infix automaton: one copy of a's states
/// per moved-flag value, the flag folded into the initial set (states
/// reachable by at least one step start flagged) and the final set (states
/// co-reachable, flagged, or strictly co-reachable, unflagged). A false
/// verdict carries a word of 𝓛(a) occurring strictly inside another.
CheckReport is_infix_free(const Nfa& a);

/// One seed pushed through the whole argument.
struct ReductionSummary {
    bool universal = false;
    bool gadget_local = false;
    bool gadget_infix_free = false;
    bool consistent = false;  // universal == gadget_local, and infix-free
};

/// Runs universality on the seed and the locality and infix-freeness
/// decisions on its gadget. Consistency is the executable statement that
/// the wrapped language is local exactly for universal seeds.
ReductionSummary verify_reduction(const Nfa& seed, const InclusionConfig& cfg = {});

}  // namespace locus

#endif  // LOCUS_REDUCTION_HPP_
