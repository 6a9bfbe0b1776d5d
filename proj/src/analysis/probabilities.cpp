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

#include "gkpkerr/analysis/probabilities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gkpkerr/errors.hpp"
#include "gkpkerr/numerics/gaussian.hpp"

namespace gkpkerr::analysis {

namespace {

constexpr double kGaussianCutoff = 1e-16;
// erfc(9) ~ 4e-37: Gaussian mass beyond this distance is ignored.
constexpr double kGaussianReach = 9.0;
constexpr double kDegenerateDenominator = 1e-14;

bool is_pm(Label label) { return label == Label::Plus || label == Label::Minus; }

double closed_form_pm(const ApproximateCodeword &codeword) {
    const auto &params = codeword.params();
    const auto &mu = codeword.coefficients().mu;
    const double tau = params.tau();
    const double theta = params.theta();
    const double sign = codeword.label() == Label::Plus ? 1.0 : -1.0;
    const ErrorRegionFamily family(codeword.label(), theta);
    const double decay = std::numbers::pi * std::numbers::pi * tau * tau / 4.0;
    const double half_step = 0.5 * std::numbers::pi * tau;

    // \int_R e^{-(p-c)^2} (2 +- 2 cos(theta p)) dp / sqrt(pi) over the family.
    auto weighted_mass = [&](double c) {
        const auto [first, last] = family.indices_overlapping(c - kGaussianReach, c + kGaussianReach);
        double total = 0.0;
        for (long s = first; s <= last; ++s) {
            const auto iv = family.interval(s);
            total += 2.0 * numerics::gaussian_interval_mass(c, iv.lo, iv.hi) +
                     sign * 2.0 * numerics::modulated_gaussian_interval_mass(c, iv.lo, iv.hi, theta).real();
        }
        return total;
    };

    const auto size = static_cast<int>(mu.size());
    double total = 0.0;
    for (int d = 0; d < size; ++d) {
        const double g = std::exp(-decay * d * d);
        if (d > 0 && g < kGaussianCutoff) break;
        double diag = 0.0;
        for (int n = 0; n + d < size; ++n) {
            const double w = mu[std::size_t(n)] * mu[std::size_t(n + d)];
            if (w == 0.0) continue;
            diag += w * weighted_mass(half_step * double(2 * n + d));
        }
        total += (d == 0 ? 1.0 : 2.0) * g * diag;
    }
    const double pm = *codeword.pm_norm();
    return total / (pair_sum(codeword.coefficients(), tau) * pm * pm);
}

}  // namespace

double region_mass(const ApproximateCodeword &codeword, const ErrorRegionFamily &family,
                   const numerics::QuadratureSpec &spec) {
    const bool on_q = family.axis() == Axis::Q;
    const auto support = on_q ? codeword.q_support() : codeword.p_support();
    const double max_width = on_q ? std::min(0.5, 2.0 * std::numbers::pi / std::max(codeword.q_bandwidth(), 1e-300))
                                  : std::min(1.0, std::numbers::pi / codeword.params().theta());
    std::vector<numerics::Interval> pieces;
    for (const auto &iv : family.clipped(support.lo, support.hi)) {
        for (const auto &piece : numerics::uniform_pieces(iv.lo, iv.hi, max_width)) pieces.push_back(piece);
    }
    if (pieces.empty()) return 0.0;
    auto density = [&](double v) { return on_q ? codeword.q_density(v) : codeword.p_density(v); };
    return numerics::integrate_adaptive(density, pieces, spec).value;
}

double intrinsic_error_q(const EncodingParams &params, const numerics::TruncationPolicy &policy,
                         const numerics::QuadratureSpec &spec) {
    const auto one = build_codeword(Label::One, params, policy);
    return std::clamp(region_mass(one, error_regions(Label::One, params.theta()), spec), 0.0, 1.0);
}

double intrinsic_error_pm(Label label, const EncodingParams &params, const numerics::TruncationPolicy &policy,
                          const numerics::QuadratureSpec &spec) {
    if (!is_pm(label)) throw std::invalid_argument("intrinsic_error_pm: label must be Plus or Minus");
    const auto codeword = build_codeword(label, params, policy);
    if (params.theta() > numerics::kMaxModulationFrequency) {
        return std::clamp(region_mass(codeword, error_regions(label, params.theta()), spec), 0.0, 1.0);
    }
    return std::clamp(closed_form_pm(codeword), 0.0, 1.0);
}

double asymptotic_pi_q(double alpha, double x, const numerics::TruncationPolicy &policy) {
    return asymptotic_pi_q(coefficients(alpha, x, policy));
}

double asymptotic_pi_q(const CoefficientSet &coeffs) {
    // The ratio is invariant under the common factor between rho_n and mu_n.
    const auto &mu = coeffs.mu;
    const double denominator = coeffs.sum_squares();
    if (!(denominator > 0.0)) throw DegenerateStateError("asymptotic_pi_q: all coefficients vanish");
    const auto size = static_cast<int>(mu.size());
    double numerator = 0.0;
    for (int k = 0; 2 * (2 * k + 1) < size; ++k) {
        const int shift = 2 * (2 * k + 1);
        double lag = 0.0;
        for (int n = 0; n + shift < size; ++n) lag += mu[std::size_t(n)] * mu[std::size_t(n + shift)];
        numerator += (k % 2 == 0 ? 1.0 : -1.0) * lag / double(2 * k + 1);
    }
    // clamp absorbs roundoff when the value sits at 0 or 1
    return std::clamp(0.5 + 2.0 / std::numbers::pi * numerator / denominator, 0.0, 1.0);
}

std::optional<double> asymptotic_pi_pm(Label label, double alpha, double x, const numerics::TruncationPolicy &policy) {
    return asymptotic_pi_pm(label, coefficients(alpha, x, policy));
}

std::optional<double> asymptotic_pi_pm(Label label, const CoefficientSet &coeffs) {
    if (!is_pm(label)) throw std::invalid_argument("asymptotic_pi_pm: label must be Plus or Minus");
    const auto &mu = coeffs.mu;
    double odd = 0.0;
    double family = 0.0;
    const std::size_t family_start = label == Label::Plus ? 0 : 2;
    for (std::size_t n = 1; n < mu.size(); n += 2) odd += mu[n] * mu[n];
    for (std::size_t n = family_start; n < mu.size(); n += 4) family += mu[n] * mu[n];
    const double denominator = 2.0 * (odd + 2.0 * family);
    // rho_n^2 = mu_n^2 e^{alpha^2 + x^2}
    if (!(denominator > 0.0) ||
        std::log(denominator) + coeffs.alpha * coeffs.alpha + coeffs.x * coeffs.x < std::log(kDegenerateDenominator)) {
        return std::nullopt;
    }
    return odd / denominator;
}

ProbabilityReport pi_max(const EncodingParams &params, const numerics::TruncationPolicy &policy,
                         const numerics::QuadratureSpec &spec) {
    const CoefficientSet coeffs = coefficients(params, policy);
    ProbabilityReport r{};
    r.mode = Mode::FiniteTau;
    r.alpha = params.alpha();
    r.x = params.x();
    r.tau = params.tau();
    r.pi_q = intrinsic_error_q(params, policy, spec);
    r.pi_minus = intrinsic_error_pm(Label::Minus, params, policy, spec);
    r.pi_plus = intrinsic_error_pm(Label::Plus, params, policy, spec);
    r.pi_max = std::max({r.pi_q, *r.pi_minus, *r.pi_plus});
    r.homodyne_density = coeffs.sum_squares() / std::sqrt(std::numbers::pi);
    return r;
}

ProbabilityReport pi_max_asymptotic(double alpha, double x, const numerics::TruncationPolicy &policy) {
    const CoefficientSet coeffs = coefficients(alpha, x, policy);
    ProbabilityReport r{};
    r.mode = Mode::Asymptotic;
    r.alpha = alpha;
    r.x = x;
    r.pi_q = asymptotic_pi_q(coeffs);
    r.pi_minus = asymptotic_pi_pm(Label::Minus, coeffs);
    r.pi_plus = asymptotic_pi_pm(Label::Plus, coeffs);
    r.pi_max = r.pi_q;
    if (r.pi_minus) r.pi_max = std::max(r.pi_max, *r.pi_minus);
    if (r.pi_plus) r.pi_max = std::max(r.pi_max, *r.pi_plus);
    r.homodyne_density = coeffs.sum_squares() / std::sqrt(std::numbers::pi);
    return r;
}

}  // namespace gkpkerr::analysis
