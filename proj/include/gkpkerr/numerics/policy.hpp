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

#include <stdexcept>

namespace gkpkerr::numerics {

/// Accuracy controls for integrate_adaptive.
struct QuadratureSpec {
    double absolute_tolerance = 1e-10;
    double relative_tolerance = 1e-9;
    int max_subdivisions = 4000;

    void validate() const {
        if (!(absolute_tolerance > 0.0) || !(relative_tolerance > 0.0)) {
            throw std::invalid_argument("QuadratureSpec: tolerances must be positive");
        }
        if (max_subdivisions < 1) {
            throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
        }
    }
};

/// Cutoff rule for the Fock-index sums over n.
///
/// Indices are kept while the Poisson weight e^{-a^2} a^{2n} / n! is above
/// `tail_weight_bound`; past that point the sequence is extended until three
/// consecutive squared coefficients drop below `tail_weight_bound` times the
/// largest one seen so far.
///
/// The dropped amplitudes scale like sqrt(tail_weight_bound), so the default
/// is chosen small enough that doubling n_max moves any wavefunction value
/// by well under 1e-10.
struct TruncationPolicy {
    double tail_weight_bound = 1e-20;
    int hard_max_n = 512;

    void validate() const {
        if (!(tail_weight_bound > 0.0 && tail_weight_bound < 1.0)) {
            throw std::invalid_argument("TruncationPolicy: tail_weight_bound must lie in (0, 1)");
        }
        if (hard_max_n < 1) {
            throw std::invalid_argument("TruncationPolicy: hard_max_n must be >= 1");
        }
    }
};

}  // namespace gkpkerr::numerics
