/*
   Copyright 2026 The ratcode Authors

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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratcode::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInvariantViolation = 1,
  kResourceGuard = 2,
  kUsage = 3,
};

/// Runs one command line (args[0] is the program name). Primary output goes
/// to `out` unless --output names a file; summaries and diagnostics go to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratcode::cli
