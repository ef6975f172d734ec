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

#ifndef SECSEL_CLI_HPP_
#define SECSEL_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace secsel {

/// Runs the command-line interface on `args` (without the program name).
/// Reports go to `out`; failures print one `error: <code>: <message>` line
/// to `err`. Returns 0 on success, 1 on invalid arguments, 2 on runtime
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv);

}  // namespace secsel

#endif  // SECSEL_CLI_HPP_
