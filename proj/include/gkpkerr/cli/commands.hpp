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

#include "gkpkerr/cli/config.hpp"
#include "gkpkerr/io/dataset.hpp"

namespace gkpkerr::cli {

/// Densities of the four codewords on a q or p grid. A label whose state
/// is degenerate for these parameters yields a NaN column.
io::Dataset cmd_codeword(const RunConfig &config);
/// Asymptotic error probabilities and homodyne density versus x.
io::Dataset cmd_sweep_x(const RunConfig &config);
/// Success probability and mean intrinsic error versus z, for each alpha.
io::Dataset cmd_sweep_z(const RunConfig &config);
/// Finite-tau error probabilities versus tau.
io::Dataset cmd_sweep_tau(const RunConfig &config);

struct CheckResult {
    std::string name;
    double measured;
    double bound;
    bool upper;  // true: pass iff measured <= bound; false: measured >= bound
    bool passed;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// Normalization, Fourier, oracle-equivalence, asymptotic-consistency and
/// reference-value checks. --tolerance replaces the tolerance of the first
/// four groups.
ValidationReport cmd_validate(const RunConfig &config);

void write_report(std::ostream &out, const ValidationReport &report);

}  // namespace gkpkerr::cli
