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

/// Globally adaptive Gauss-Kronrod (10/21 point) quadrature.
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate meets max(absolute_tolerance, relative_tolerance * |value|).
/// Work proceeds in a fixed order and the final sum runs over the pieces
/// sorted by position, so results are bit-identical across calls.
///
/// The integrand may return double or std::complex<double>.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "gkpkerr/errors.hpp"
#include "gkpkerr/numerics/policy.hpp"

namespace gkpkerr::numerics {

template <typename T>
struct QuadratureResult {
    T value{};
    double error_estimate = 0.0;
};

struct Interval {
    double lo;
    double hi;
};

namespace detail {

// Kronrod abscissae (positive half, descending) and weights for the 21-point
// rule; every odd index is also a node of the embedded 10-point Gauss rule.
inline constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208034893940, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};
inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

template <typename T>
struct Piece {
    double lo;
    double hi;
    T value;
    double error;
    bool splittable;
};

template <typename T, typename F>
Piece<T> kronrod21(F &f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const T f_center = static_cast<T>(f(center));
    T kronrod = f_center * kKronrodWeights[10];
    T gauss{};
    for (std::size_t j = 0; j < 10; ++j) {
        const double dx = half * kKronrodNodes[j];
        const T sum = static_cast<T>(f(center - dx)) + static_cast<T>(f(center + dx));
        kronrod += sum * kKronrodWeights[j];
        if (j % 2 == 1) gauss += sum * kGaussWeights[j / 2];
    }
    kronrod *= half;
    gauss *= half;
    double error = std::abs(kronrod - gauss);
    if (!std::isfinite(std::abs(kronrod))) {
        throw NumericalError("integrate_adaptive: integrand returned a non-finite value");
    }
    const double width = hi - lo;
    const bool splittable = width > 64.0 * std::numeric_limits<double>::epsilon() *
                                        std::max({std::abs(lo), std::abs(hi), 1e-300});
    return {lo, hi, kronrod, error, splittable};
}

template <typename T>
T sum_by_position(std::vector<Piece<T>> &pieces, double &error) {
    std::sort(pieces.begin(), pieces.end(), [](const auto &a, const auto &b) { return a.lo < b.lo; });
    T total{};
    error = 0.0;
    for (const auto &p : pieces) {
        total += p.value;
        error += p.error;
    }
    return total;
}

}  // namespace detail

/// Integrates f over the union of the given disjoint intervals.
template <typename F, typename T = std::invoke_result_t<F &, double>>
QuadratureResult<T> integrate_adaptive(F &&f, std::span<const Interval> intervals, const QuadratureSpec &spec = {}) {
    spec.validate();
    std::vector<detail::Piece<T>> pieces;
    pieces.reserve(intervals.size() + static_cast<std::size_t>(spec.max_subdivisions) + 1);
    for (const auto &iv : intervals) {
        if (!(std::isfinite(iv.lo) && std::isfinite(iv.hi) && iv.lo < iv.hi)) {
            throw std::invalid_argument("integrate_adaptive: intervals must be finite with lo < hi");
        }
        pieces.push_back(detail::kronrod21<T>(f, iv.lo, iv.hi));
    }
    if (pieces.empty()) return {};

    auto total_value = [&] {
        T v{};
        for (const auto &p : pieces) v += p.value;
        return v;
    };
    auto total_error = [&] {
        double e = 0.0;
        for (const auto &p : pieces) e += p.error;
        return e;
    };

    int splits = 0;
    while (true) {
        const double target = std::max(spec.absolute_tolerance, spec.relative_tolerance * std::abs(total_value()));
        if (total_error() <= target) break;

        auto worst = pieces.end();
        for (auto it = pieces.begin(); it != pieces.end(); ++it) {
            if (it->splittable && (worst == pieces.end() || it->error > worst->error)) worst = it;
        }
        if (worst == pieces.end() || splits >= spec.max_subdivisions) {
            double err = 0.0;
            const T best = detail::sum_by_position(pieces, err);
            throw QuadratureError("integrate_adaptive: tolerance not reached after " + std::to_string(splits) +
                                      " subdivisions (error estimate " + std::to_string(err) + ")",
                                  std::abs(best), err);
        }
        const double lo = worst->lo;
        const double hi = worst->hi;
        const double mid = 0.5 * (lo + hi);
        *worst = detail::kronrod21<T>(f, lo, mid);
        pieces.push_back(detail::kronrod21<T>(f, mid, hi));
        ++splits;
    }

    QuadratureResult<T> out;
    out.value = detail::sum_by_position(pieces, out.error_estimate);
    return out;
}

/// Integrates f over [a, b].
template <typename F, typename T = std::invoke_result_t<F &, double>>
QuadratureResult<T> integrate_adaptive(F &&f, double a, double b, const QuadratureSpec &spec = {}) {
    if (!(a < b)) throw std::invalid_argument("integrate_adaptive: requires a < b");
    const Interval whole{a, b};
    return integrate_adaptive(std::forward<F>(f), std::span<const Interval>(&whole, 1), spec);
}

/// Splits [a, b] into pieces no wider than max_width; used to pre-resolve
/// oscillatory integrands before adaptive refinement starts.
inline std::vector<Interval> uniform_pieces(double a, double b, double max_width) {
    if (!(a < b) || !(max_width > 0.0)) throw std::invalid_argument("uniform_pieces: invalid range");
    const auto count = static_cast<std::size_t>(std::ceil((b - a) / max_width));
    std::vector<Interval> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double lo = a + (b - a) * double(i) / double(count);
        const double hi = i + 1 == count ? b : a + (b - a) * double(i + 1) / double(count);
        out.push_back({lo, hi});
    }
    return out;
}

}  // namespace gkpkerr::numerics
