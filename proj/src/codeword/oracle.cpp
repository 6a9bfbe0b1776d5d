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

#include "gkpkerr/codeword/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gkpkerr/errors.hpp"

namespace gkpkerr {

namespace {

const double kInvQuarterPi = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));

}  // namespace

std::complex<double> coherent_overlap(std::complex<double> a, std::complex<double> b) {
    return std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(a) * b);
}

CoherentSuperposition::CoherentSuperposition(std::vector<CoherentComponent> components)
    : components_(std::move(components)), gram_(0.0) {
    std::complex<double> total{0.0, 0.0};
    for (const auto &m : components_) {
        for (const auto &n : components_) total += m.weight * n.weight * coherent_overlap(m.amplitude, n.amplitude);
    }
    gram_ = total.real();
    if (!(gram_ > 0.0)) throw DegenerateStateError("CoherentSuperposition: zero norm");
}

std::complex<double> CoherentSuperposition::q_amplitude(double q) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto &c : components_) {
        const double q0 = std::numbers::sqrt2 * c.amplitude.real();
        const double p0 = std::numbers::sqrt2 * c.amplitude.imag();
        const double d = q - q0;
        acc += c.weight * std::exp(std::complex<double>(-0.5 * d * d, p0 * q - 0.5 * q0 * p0));
    }
    return kInvQuarterPi * acc / std::sqrt(gram_);
}

std::complex<double> CoherentSuperposition::p_amplitude(double p) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto &c : components_) {
        const double q0 = std::numbers::sqrt2 * c.amplitude.real();
        const double p0 = std::numbers::sqrt2 * c.amplitude.imag();
        const double d = p - p0;
        acc += c.weight * std::exp(std::complex<double>(-0.5 * d * d, -q0 * p + 0.5 * q0 * p0));
    }
    return kInvQuarterPi * acc / std::sqrt(gram_);
}

CoherentSuperposition coherent_superposition_oracle(const EncodingParams &params,
                                                    const numerics::TruncationPolicy &policy) {
    const CoefficientSet coeffs = coefficients(params, policy);
    const double shift = std::numbers::pi * params.tau() / std::numbers::sqrt2;
    std::vector<CoherentComponent> components;
    for (std::size_t n = 0; n < coeffs.mu.size(); ++n) {
        if (coeffs.mu[n] == 0.0) continue;
        components.push_back({coeffs.mu[n], {0.0, shift * double(n)}});
    }
    return CoherentSuperposition(std::move(components));
}

double fidelity(const CoherentSuperposition &oracle, const ApproximateCodeword &codeword,
                const numerics::QuadratureSpec &spec) {
    const auto pieces = q_pieces(codeword);
    const auto result = numerics::integrate_adaptive(
        [&](double q) { return std::conj(oracle.q_amplitude(q)) * codeword.q_amplitude(q); }, pieces, spec);
    return std::abs(result.value);
}

}  // namespace gkpkerr
