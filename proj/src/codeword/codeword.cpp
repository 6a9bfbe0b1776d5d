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

#include "gkpkerr/codeword/codeword.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gkpkerr/errors.hpp"

namespace gkpkerr {

namespace {

constexpr double kGaussianCutoff = 1e-16;
constexpr double kSupportFloor = 1e-16;
const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);

// Half-width beyond which amplitude_scale * e^{-d^2} drops under kSupportFloor.
double envelope_reach(double amplitude_scale) {
    const double ratio = amplitude_scale / kSupportFloor;
    return (ratio > 1.0 ? std::sqrt(std::log(ratio)) : 0.0) + 1.0;
}

}  // namespace

ApproximateCodeword::ApproximateCodeword(Label label, EncodingParams params, CoefficientSet coeffs, double norm)
    : label_(label), params_(params), coeffs_(std::move(coeffs)), norm_(norm) {}

std::complex<double> ApproximateCodeword::one_q(double q) const {
    const std::complex<double> z = std::polar(1.0, std::numbers::pi * params_.tau() * q);
    std::complex<double> acc{0.0, 0.0};
    for (auto it = coeffs_.mu.rbegin(); it != coeffs_.mu.rend(); ++it) acc = acc * z + *it;
    return kInvSqrtPi * norm_ * std::exp(-0.5 * q * q) * acc;
}

double ApproximateCodeword::one_p(double p) const {
    const double step = std::numbers::pi * params_.tau();
    double acc = 0.0;
    for (std::size_t n = 0; n < coeffs_.mu.size(); ++n) {
        const double d = p - step * double(n);
        if (d * d > 1500.0) continue;
        acc += coeffs_.mu[n] * std::exp(-0.5 * d * d);
    }
    return kInvSqrtPi * norm_ * acc;
}

std::complex<double> ApproximateCodeword::q_amplitude(double q) const {
    const double theta = params_.theta();
    switch (label_) {
        case Label::One: return one_q(q);
        case Label::Zero: return one_q(q - theta);
        case Label::Plus: return (one_q(q - theta) + one_q(q)) / *pm_norm_;
        case Label::Minus: return (one_q(q - theta) - one_q(q)) / *pm_norm_;
    }
    return {};
}

std::complex<double> ApproximateCodeword::p_amplitude(double p) const {
    const double base = one_p(p);
    const std::complex<double> shift = std::polar(1.0, -p * params_.theta());
    switch (label_) {
        case Label::One: return {base, 0.0};
        case Label::Zero: return shift * base;
        case Label::Plus: return (shift + 1.0) * base / *pm_norm_;
        case Label::Minus: return (shift - 1.0) * base / *pm_norm_;
    }
    return {};
}

numerics::Interval ApproximateCodeword::q_support() const {
    double scale = kInvSqrtPi * norm_ * norm_ * std::pow(coeffs_.sum_abs(), 2);
    if (pm_norm_) scale *= 4.0 / (*pm_norm_ * *pm_norm_);
    const double reach = envelope_reach(scale);
    const double theta = params_.theta();
    switch (label_) {
        case Label::One: return {-reach, reach};
        case Label::Zero: return {theta - reach, theta + reach};
        default: return {-reach, theta + reach};
    }
}

numerics::Interval ApproximateCodeword::p_support() const {
    double scale = kInvSqrtPi * norm_ * norm_ * std::pow(coeffs_.sum_abs(), 2);
    if (pm_norm_) scale *= 4.0 / (*pm_norm_ * *pm_norm_);
    const double reach = envelope_reach(scale);
    return {-reach, std::numbers::pi * params_.tau() * coeffs_.n_max + reach};
}

double ApproximateCodeword::q_bandwidth() const { return std::numbers::pi * params_.tau() * coeffs_.n_max; }

ApproximateCodeword build_codeword(Label label, const EncodingParams &params, const numerics::TruncationPolicy &policy) {
    CoefficientSet coeffs = coefficients(params, policy);
    const double norm = normalization_constant(coeffs, params.tau());
    ApproximateCodeword out(label, params, coeffs, norm);
    if (label == Label::Plus || label == Label::Minus) {
        const std::complex<double> ov = overlap_zero_one(coeffs, params.tau());
        const double sign = label == Label::Plus ? 1.0 : -1.0;
        const double pm = std::sqrt(std::max(0.0, 2.0 * (1.0 + sign * ov.real())));
        if (!(pm >= kPmNormFloor)) {
            throw DegenerateStateError(std::string("build_codeword: N_") + (sign > 0 ? "+" : "-") + " = " +
                                       std::to_string(pm) + " below floor; |0~> and |1~> nearly coincide");
        }
        out.pm_norm_ = pm;
        out.overlap_ = ov;
    }
    return out;
}

std::complex<double> overlap_zero_one(const EncodingParams &params, const numerics::TruncationPolicy &policy) {
    return overlap_zero_one(coefficients(params, policy), params.tau());
}

std::complex<double> overlap_zero_one(const CoefficientSet &coeffs, double tau) {
    const double s = pair_sum(coeffs, tau);
    if (!(s > 0.0)) throw DegenerateStateError("overlap_zero_one: all coefficients vanish");
    const double theta = 0.5 / tau;
    const double decay = std::numbers::pi * std::numbers::pi * tau * tau / 4.0;
    // phase per unit of (n + n'): pi tau theta / 2
    const double phase_step = 0.5 * std::numbers::pi * tau * theta;
    const auto size = static_cast<int>(coeffs.mu.size());
    std::complex<double> total{0.0, 0.0};
    for (int d = 0; d < size; ++d) {
        const double g = std::exp(-decay * d * d);
        if (d > 0 && g < kGaussianCutoff) break;
        std::complex<double> diag{0.0, 0.0};
        for (int n = 0; n + d < size; ++n) {
            diag += coeffs.mu[std::size_t(n)] * coeffs.mu[std::size_t(n + d)] *
                    std::polar(1.0, phase_step * double(2 * n + d));
        }
        total += (d == 0 ? 1.0 : 2.0) * g * diag;
    }
    return std::exp(-0.25 * theta * theta) / s * total;
}

std::vector<numerics::Interval> q_pieces(const ApproximateCodeword &c, double extra_frequency) {
    const auto support = c.q_support();
    const double frequency = c.q_bandwidth() + std::abs(extra_frequency);
    const double width = frequency > 0.0 ? std::min(0.5, 2.0 * std::numbers::pi / frequency) : 0.5;
    return numerics::uniform_pieces(support.lo, support.hi, width);
}

std::vector<numerics::Interval> p_pieces(const ApproximateCodeword &c) {
    const auto support = c.p_support();
    const double theta = c.params().theta();
    return numerics::uniform_pieces(support.lo, support.hi, std::min(1.0, std::numbers::pi / theta));
}

double q_norm_squared(const ApproximateCodeword &c, const numerics::QuadratureSpec &spec) {
    const auto pieces = q_pieces(c);
    return numerics::integrate_adaptive([&](double q) { return c.q_density(q); }, pieces, spec).value;
}

double p_norm_squared(const ApproximateCodeword &c, const numerics::QuadratureSpec &spec) {
    const auto pieces = p_pieces(c);
    return numerics::integrate_adaptive([&](double p) { return c.p_density(p); }, pieces, spec).value;
}

}  // namespace gkpkerr
