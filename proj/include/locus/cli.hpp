// cli.hpp -- command-line surface over the decision procedures and
// generators
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

#ifndef LOCUS_CLI_HPP_
#define LOCUS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace locus {

/// Runs one toolkit invocation. @p args holds the arguments after the
/// program name, in command-line order; results go to @p out, diagnostics
/// to @p err. Returns the process exit code: 0 for a true verdict or a
/// completed generation, 1 for a false verdict, 2 for an input or usage
/// error, 3 for an exceeded resource cap. The environment variable
/// LOCUS_STATE_CAP, when set, replaces the default exploration caps.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err);

}  // namespace locus

#endif  // LOCUS_CLI_HPP_
