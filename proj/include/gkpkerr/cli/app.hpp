// Copyright 2026 The gkpkerr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace gkpkerr::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitValidationFailure = 1,
    kExitConfigError = 2,
    kExitNumericalFailure = 3,
};

/// Runs the command line `args` (args[0] is the program name). Datasets and
/// reports go to --out or `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace gkpkerr::cli
