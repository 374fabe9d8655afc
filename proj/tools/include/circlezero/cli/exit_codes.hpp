/*
   Copyright 2026 The circlezero Authors

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


#ifndef CIRCLEZERO_CLI_EXIT_CODES_HPP
#define CIRCLEZERO_CLI_EXIT_CODES_HPP

#include <vector>

namespace circlezero::cli {

enum ExitCode : int { kOk = 0, kRefuted = 1, kUsage = 2, kIndeterminate = 3, kNumericFailure = 4 };

/// Outcome of one task in a batch.
enum class Outcome { ok, refuted, indeterminate, numeric_failure };

/// Batch exit code: numeric failure > refuted > indeterminate > ok.
int exit_code_for(const std::vector<Outcome>& outcomes);

}  // namespace circlezero::cli

#endif  // CIRCLEZERO_CLI_EXIT_CODES_HPP
