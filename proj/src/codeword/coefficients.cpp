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

#include "gkpkerr/codeword/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gkpkerr/errors.hpp"
#include "gkpkerr/numerics/hermite.hpp"

namespace gkpkerr {

namespace {

constexpr int kTailRun = 3;
constexpr double kGaussianCutoff = 1e-16;

// log of the Poisson weight e^{-a^2} a^{2n} / n!; -inf where it vanishes.
double log_poisson_weight(double alpha, int n) {
    if (alpha == 0.0) return n == 0 ? 0.0 : -INFINITY;
    return -alpha * alpha + 2.0 * n * std::log(alpha) - std::lgamma(n + 1.0);
}

void check_alpha_x(double alpha, double x) {
    if (!std::isfinite(alpha) || alpha < 0.0) throw std::invalid_argument("coefficients: alpha must be >= 0");
    if (!std::isfinite(x)) throw std::invalid_argument("coefficients: x must be finite");
}

std::vector<double> mu_values(double alpha, double x, int count) {
    const auto h = numerics::hermite_normalized_sequence(count - 1, x);
    const double quarter_pi = std::sqrt(std::sqrt(std::numbers::pi));
    std::vector<double> mu(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        const double lw = log_poisson_weight(alpha, n);
        mu[static_cast<std::size_t>(n)] = std::isinf(lw) ? 0.0 : quarter_pi * std::exp(0.5 * lw) * h[static_cast<std::size_t>(n)];
    }
    return mu;
}

}  // namespace

double CoefficientSet::sum_squares() const {
    double s = 0.0;
    for (double m : mu) s += m * m;
    return s;
}

double CoefficientSet::sum_abs() const {
    double s = 0.0;
    for (double m : mu) s += std::abs(m);
    return s;
}

CoefficientSet coefficients(const EncodingParams &params, const numerics::TruncationPolicy &policy) {
    return coefficients(params.alpha(), params.x(), policy);
}

CoefficientSet coefficients(double alpha, double x, const numerics::TruncationPolicy &policy) {
    check_alpha_x(alpha, x);
    policy.validate();
    const double log_bound = std::log(policy.tail_weight_bound);

    // Last index whose Poisson weight clears the bound (the weights rise up
    // to n ~ alpha^2, then fall).
    int poisson_end = 0;
    for (int n = 0;; ++n) {
        const double lw = log_poisson_weight(alpha, n);
        if (lw > log_bound) poisson_end = n;
        if (n > alpha * alpha && !(lw > log_bound)) break;
        if (n > policy.hard_max_n) {
            throw TruncationError("coefficients: Poisson weights still above tail bound at hard_max_n = " +
                                  std::to_string(policy.hard_max_n));
        }
    }

    int count = std::min(policy.hard_max_n + 1, poisson_end + 64);
    while (true) {
        std::vector<double> mu = mu_values(alpha, x, count);
        double largest = 0.0;
        for (int n = 0; n <= poisson_end && n < count; ++n) largest = std::max(largest, mu[std::size_t(n)] * mu[std::size_t(n)]);
        int run = 0;
        for (int n = poisson_end + 1; n < count; ++n) {
            const double sq = mu[std::size_t(n)] * mu[std::size_t(n)];
            largest = std::max(largest, sq);
            run = sq <= policy.tail_weight_bound * largest ? run + 1 : 0;
            if (run == kTailRun) {
                mu.resize(std::size_t(n) + 1);
                return CoefficientSet{std::move(mu), n, alpha, x};
            }
        }
        if (count > policy.hard_max_n) {
            throw TruncationError("coefficients: tail bound not met within hard_max_n = " +
                                  std::to_string(policy.hard_max_n));
        }
        count = std::min(policy.hard_max_n + 1, 2 * count);
    }
}

CoefficientSet coefficients_with_count(double alpha, double x, int count) {
    check_alpha_x(alpha, x);
    if (count < 1) throw std::invalid_argument("coefficients_with_count: count must be >= 1");
    return CoefficientSet{mu_values(alpha, x, count), count - 1, alpha, x};
}

double pair_sum(const CoefficientSet &coeffs, double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("pair_sum: tau must be > 0");
    const double decay = std::numbers::pi * std::numbers::pi * tau * tau / 4.0;
    const auto size = static_cast<int>(coeffs.mu.size());
    double total = 0.0;
    for (int d = 0; d < size; ++d) {
        const double g = std::exp(-decay * d * d);
        if (d > 0 && g < kGaussianCutoff) break;
        double diag = 0.0;
        for (int n = 0; n + d < size; ++n) diag += coeffs.mu[std::size_t(n)] * coeffs.mu[std::size_t(n + d)];
        total += (d == 0 ? 1.0 : 2.0) * g * diag;
    }
    return total;
}

double normalization_constant(const CoefficientSet &coeffs, double tau) {
    if (std::all_of(coeffs.mu.begin(), coeffs.mu.end(), [](double m) { return m == 0.0; })) {
        throw DegenerateStateError("normalization_constant: all coefficients vanish");
    }
    const double s = pair_sum(coeffs, tau);
    if (!(s > 0.0)) throw DegenerateStateError("normalization_constant: non-positive norm");
    return std::sqrt(std::sqrt(std::numbers::pi)) / std::sqrt(s);
}

}  // namespace gkpkerr
