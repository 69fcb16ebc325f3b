// Copyright 2026 The Authors.
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

#ifndef BLM_CLI_HPP_
#define BLM_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace blm {

// The command-line front end, separated from main() so tests can drive it
// in-process. args excludes the program name. Subcommands: solve, exact,
// oracle, validate, gen, bench. Returns the process exit code: 0 success,
// 1 invalid input (validation, schema, syntax, oracle size guard), 2 usage
// error (flags, malformed epsilon), 3 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace blm

#endif  // BLM_CLI_HPP_
