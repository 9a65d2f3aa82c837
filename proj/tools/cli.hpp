/*
Copyright (c) 2026 The frameness authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef FRAMENESS_TOOLS_CLI_HPP
#define FRAMENESS_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace frameness::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 2,
  kResourceLimit = 3,
  kUsage = 64,
};

/// Runs one subcommand. Results go to `out` (or --out FILE), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace frameness::cli

#endif  // FRAMENESS_TOOLS_CLI_HPP
