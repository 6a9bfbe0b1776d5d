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

#include "gkpkerr/analysis/postselection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gkpkerr/analysis/probabilities.hpp"
#include "gkpkerr/codeword/coefficients.hpp"
#include "gkpkerr/errors.hpp"

namespace gkpkerr::analysis {

namespace {

void check_z_alpha(double z, double alpha) {
    if (!std::isfinite(z) || z < 0.0) throw std::invalid_argument("post-selection: z must be finite and >= 0");
    if (!std::isfinite(alpha) || alpha < 0.0) throw std::invalid_argument("post-selection: alpha must be >= 0");
}

}  // namespace

double homodyne_density(double alpha, double x, const numerics::TruncationPolicy &policy) {
    return coefficients(alpha, x, policy).sum_squares() / std::sqrt(std::numbers::pi);
}

numerics::Interval acceptance_window(double z, double alpha, const numerics::TruncationPolicy &policy) {
    check_z_alpha(z, alpha);
    // h_n(x)^2 has decayed below 1e-25 once |x| exceeds its turning point
    // sqrt(2n + 1) by 8.
    const int n_max = coefficients(alpha, 0.0, policy).n_max;
    const double reach = std::sqrt(2.0 * n_max + 1.0) + 8.0;
    if (z == 0.0) return {-reach, reach};
    const double half = std::min(alpha / z, reach);
    return {-half, half};
}

double success_probability(double z, double alpha, const numerics::QuadratureSpec &spec,
                           const numerics::TruncationPolicy &policy) {
    const auto window = acceptance_window(z, alpha, policy);
    if (!(window.lo < window.hi)) return 0.0;
    const auto pieces = numerics::uniform_pieces(window.lo, window.hi, 0.5);
    const auto result =
        numerics::integrate_adaptive([&](double x) { return homodyne_density(alpha, x, policy); }, pieces, spec);
    return std::clamp(result.value, 0.0, 1.0);
}

double mean_intrinsic_error(double z, double alpha, const numerics::QuadratureSpec &spec,
                            const numerics::TruncationPolicy &policy) {
    const auto window = acceptance_window(z, alpha, policy);
    if (!(window.lo < window.hi)) throw DegenerateStateError("mean_intrinsic_error: empty acceptance window");
    const double success = success_probability(z, alpha, spec, policy);
    if (!(success > 0.0)) throw DegenerateStateError("mean_intrinsic_error: zero success probability");
    const auto pieces = numerics::uniform_pieces(window.lo, window.hi, kMeanErrorPieceWidth);
    const auto weighted = numerics::integrate_adaptive(
        [&](double x) {
            const auto report = pi_max_asymptotic(alpha, x, policy);
            return report.homodyne_density * report.pi_max;
        },
        pieces, spec);
    return std::clamp(weighted.value / success, 0.0, 1.0);
}

std::optional<double> threshold_tau(double alpha, double tolerance, const numerics::QuadratureSpec &spec,
                                    const numerics::TruncationPolicy &policy) {
    if (!std::isfinite(alpha) || !(alpha > 0.0)) throw std::invalid_argument("threshold_tau: alpha must be > 0");
    if (!(tolerance > 0.0)) throw std::invalid_argument("threshold_tau: tolerance must be > 0");
    const double limit = pi_max_asymptotic(alpha, 0.0, policy).pi_max;

    std::optional<double> threshold;
    for (int k = kThresholdGridPoints; k >= 1; --k) {
        const double tau = double(k) / 10.0;  // nearest double to k * kThresholdGridStep
        bool within = false;
        try {
            within = std::abs(pi_max(EncodingParams(alpha, tau, 0.0), policy, spec).pi_max - limit) <= tolerance;
        } catch (const DegenerateStateError &) {
            within = false;
        }
        if (!within) break;
        threshold = tau;
    }
    return threshold;
}

}  // namespace gkpkerr::analysis
