// Copyright 2026 The lanerouter Authors
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

// Command-line front end. Kept in the library so tests can drive it without
// spawning processes.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lanerouter {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitPrecheck = 3,
  kExitNonMonotone = 4,
  kExitIo = 5,
};

/// `args` excludes the program name. Normal output goes to `out`, every
/// diagnostic to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lanerouter
