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

#include "gkpkerr/numerics/hermite.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gkpkerr::numerics {

namespace {

constexpr double kRescaleAbove = 1e200;
constexpr double kRescaleFactor = 1e-200;
const double kLogRescale = std::log(1e200);

void check_args(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite: n must be >= 0");
    if (!std::isfinite(x)) throw std::invalid_argument("hermite: x must be finite");
}

// Runs the normalized recurrence, calling sink(k, h_k) for k = 0..n_max.
template <typename Sink>
void normalized_recurrence(int n_max, double x, Sink &&sink) {
    const double gauss_log = -0.5 * x * x;
    double log_scale = 0.0;
    double prev = 0.0;
    double cur = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));

    auto emit = [&](int k, double v) {
        // v * exp(log_scale + gauss_log), folded into one exp so it only
        // underflows when h_k itself does
        const double log_factor = log_scale + gauss_log;
        if (v == 0.0 || log_factor > -700.0) {
            sink(k, v * std::exp(log_factor));
            return;
        }
        sink(k, std::copysign(std::exp(std::log(std::abs(v)) + log_scale + gauss_log), v));
    };

    emit(0, cur);
    for (int k = 0; k < n_max; ++k) {
        const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(double(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
        if (std::abs(cur) > kRescaleAbove) {
            cur *= kRescaleFactor;
            prev *= kRescaleFactor;
            log_scale += kLogRescale;
        }
        emit(k + 1, cur);
    }
}

}  // namespace

double hermite_physicists(int n, double x) {
    check_args(n, x);
    double prev = 0.0;
    double cur = 1.0;
    for (int k = 0; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    if (!std::isfinite(cur)) {
        throw std::overflow_error("hermite_physicists: H_" + std::to_string(n) +
                                  " overflows double range; use hermite_normalized");
    }
    return cur;
}

double hermite_normalized(int n, double x) {
    check_args(n, x);
    double out = 0.0;
    normalized_recurrence(n, x, [&](int k, double v) {
        if (k == n) out = v;
    });
    return out;
}

std::vector<double> hermite_normalized_sequence(int n_max, double x) {
    check_args(n_max, x);
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
    normalized_recurrence(n_max, x, [&](int k, double v) { out[static_cast<std::size_t>(k)] = v; });
    return out;
}

}  // namespace gkpkerr::numerics
