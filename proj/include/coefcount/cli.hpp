/* Copyright 2026 The coefcount Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef COEFCOUNT_CLI_HPP
#define COEFCOUNT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace coefcount {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitComputation = 1, kExitUsage = 2 };

/// Runs the tool on argv-style arguments (args[0] is the program name). JSON goes to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

/// Number of variables referenced by polynomial text: the largest I in xI, or 1.
std::size_t infer_nvars(const std::string& text);

}  // namespace coefcount

#endif
