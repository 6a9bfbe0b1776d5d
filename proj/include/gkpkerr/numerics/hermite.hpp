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

#include <vector>

namespace gkpkerr::numerics {

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
/// Throws std::overflow_error when the value leaves double range; use
/// hermite_normalized for large n.
double hermite_physicists(int n, double x);

/// Orthonormal Hermite function h_n(x) = H_n(x) e^{-x^2/2} / sqrt(2^n n! sqrt(pi)).
///
/// Evaluated by the recurrence
///   h_{n+1} = sqrt(2/(n+1)) x h_n - sqrt(n/(n+1)) h_{n-1}
/// on a rescaled copy with a running log-scale, so intermediate values never
/// overflow and the Gaussian factor is applied once at the end.
double hermite_normalized(int n, double x);

/// h_0(x) ... h_{n_max}(x) in one pass.
std::vector<double> hermite_normalized_sequence(int n_max, double x);

}  // namespace gkpkerr::numerics
