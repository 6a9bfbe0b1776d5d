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

#include "gkpkerr/numerics/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gkpkerr/errors.hpp"

namespace gkpkerr::numerics {

namespace {

constexpr int kMaxSeriesTerms = 400;

// erf(u - iy) - erf(u) for finite u.
std::complex<double> erf_imaginary_shift(double u, double y) {
    // |erf(u - iy) - erf(u)| ~ e^{y^2 - u^2}: below double range here.
    if (y == 0.0 || u * u - y * y > 750.0) return {0.0, 0.0};

    // h_{k-1}(u) by the normalized recurrence, started without the Gaussian
    // factor; e^{-u^2} is applied once to the finished sum.
    const double quarter_pi = std::sqrt(std::sqrt(std::numbers::pi));
    const double envelope = std::exp(-0.5 * u * u);
    double h_prev = 0.0;
    double h_cur = 1.0 / quarter_pi;
    double coeff = y;  // c_1
    std::complex<double> i_pow{0.0, 1.0};
    std::complex<double> sum{0.0, 0.0};

    for (int k = 1; k <= kMaxSeriesTerms; ++k) {
        sum += i_pow * (coeff * h_cur);

        // |h_n| <= pi^{-1/4} bounds each remaining term; past k ~ 2y^2 the
        // coefficients decay super-geometrically.
        if (k > 2.0 * y * y + 2.0 && 2.0 / std::sqrt(std::numbers::pi) * coeff * envelope < 1e-18) {
            break;
        }
        if (k == kMaxSeriesTerms) {
            throw NumericalError("modulated_gaussian_interval_mass: series did not converge");
        }

        const double h_next = std::sqrt(2.0 / k) * u * h_cur - std::sqrt(double(k - 1) / k) * h_prev;
        h_prev = h_cur;
        h_cur = h_next;
        coeff *= y * std::sqrt(2.0 * k) / (k + 1);
        i_pow *= std::complex<double>{0.0, 1.0};
    }
    // The recurrence above lacks e^{-u^2/2}; the prefactor carries another one.
    return -2.0 / quarter_pi * std::exp(-u * u) * sum;
}

}  // namespace

double gaussian_interval_mass(double center, double a, double b) {
    if (std::isnan(center) || std::isnan(a) || std::isnan(b)) {
        throw std::invalid_argument("gaussian_interval_mass: NaN argument");
    }
    if (a > b) throw std::invalid_argument("gaussian_interval_mass: requires a <= b");
    const double u = a - center;
    const double v = b - center;
    if (u >= 0.0) return 0.5 * (std::erfc(u) - std::erfc(v));
    if (v <= 0.0) return 0.5 * (std::erfc(-v) - std::erfc(-u));
    return 0.5 * (std::erf(v) - std::erf(u));
}

std::complex<double> modulated_gaussian_interval_mass(double center, double a, double b, double omega) {
    if (!std::isfinite(center) || std::isnan(a) || std::isnan(b) || !std::isfinite(omega)) {
        throw std::invalid_argument("modulated_gaussian_interval_mass: invalid argument");
    }
    if (a > b) throw std::invalid_argument("modulated_gaussian_interval_mass: requires a <= b");
    if (std::abs(omega) > kMaxModulationFrequency) {
        throw std::invalid_argument("modulated_gaussian_interval_mass: |omega| above supported range");
    }
    const double y = 0.5 * omega;
    const double u = a - center;
    const double v = b - center;
    const std::complex<double> shift_b = std::isfinite(v) ? erf_imaginary_shift(v, y) : 0.0;
    const std::complex<double> shift_a = std::isfinite(u) ? erf_imaginary_shift(u, y) : 0.0;
    const double real_part = 2.0 * gaussian_interval_mass(center, a, b);
    const std::complex<double> bracket = real_part + (shift_b - shift_a);
    const std::complex<double> phase = std::polar(std::exp(-0.25 * omega * omega), omega * center);
    return 0.5 * phase * bracket;
}

}  // namespace gkpkerr::numerics
