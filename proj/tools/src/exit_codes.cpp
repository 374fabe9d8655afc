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


#include "circlezero/cli/exit_codes.hpp"

namespace circlezero::cli {

int exit_code_for(const std::vector<Outcome>& outcomes) {
  bool refuted = false, indeterminate = false;
  for (Outcome o : outcomes) {
    switch (o) {
      case Outcome::numeric_failure: return kNumericFailure;
      case Outcome::refuted: refuted = true; break;
      case Outcome::indeterminate: indeterminate = true; break;
      case Outcome::ok: break;
    }
  }
  if (refuted) return kRefuted;
  if (indeterminate) return kIndeterminate;
  return kOk;
}

}  // namespace circlezero::cli
