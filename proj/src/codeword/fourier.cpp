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

#include "gkpkerr/codeword/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gkpkerr {

std::complex<double> numeric_fourier_transform(const ApproximateCodeword &c, double p,
                                               const numerics::QuadratureSpec &spec) {
    const auto pieces = q_pieces(c, p);
    const auto result = numerics::integrate_adaptive(
        [&](double q) { return c.q_amplitude(q) * std::polar(1.0, -p * q); }, pieces, spec);
    return result.value / std::sqrt(2.0 * std::numbers::pi);
}

double fourier_consistency(const ApproximateCodeword &c, std::span<const double> p_grid,
                           const numerics::QuadratureSpec &spec) {
    double worst = 0.0;
    for (double p : p_grid) worst = std::max(worst, std::abs(numeric_fourier_transform(c, p, spec) - c.p_amplitude(p)));
    return worst;
}

}  // namespace gkpkerr
