// Copyright 2026 The kakpair Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kakpair {

inline constexpr const char *kVersion = "0.1.0";

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitFalse = 2 };

/// Runs the command line `args` (without the program name). The JSON
/// report goes to `out` (or the --out file), structured errors to `err`.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

}  // namespace kakpair
