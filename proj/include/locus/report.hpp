// report.hpp -- verdicts, witnesses, and run statistics shared by the
// decision procedures
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

#ifndef LOCUS_REPORT_HPP_
#define LOCUS_REPORT_HPP_

#include <cstdint>
#include <optional>

#include "locus/types.hpp"

namespace locus {

/// A pivot exchange that leaves the language: alpha·pivot·beta and
/// gamma·pivot·delta are both accepted while alpha·pivot·delta is not.
/// All three claims re-verify by plain membership calls.
struct CartesianWitness {
    Symbol pivot;
    Word alpha;
    Word beta;
    Word gamma;
    Word delta;

    bool operator==(const CartesianWitness&) const = default;
};

struct CheckStats {
    std::uint64_t explored = 0;  // state pairs or product states visited
    double elapsed_ms = 0.0;
};

/// Outcome of a decision procedure. A false verdict always carries a
/// witness (unless witness emission was switched off): either a
/// counterexample word or a pivot-exchange violation.
struct CheckReport {
    bool verdict = false;
    std::optional<Word> witness;
    std::optional<CartesianWitness> cartesian;
    CheckStats stats;
};

}  // namespace locus

#endif  // LOCUS_REPORT_HPP_
