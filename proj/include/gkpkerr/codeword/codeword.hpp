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

#include <complex>
#include <optional>

#include "gkpkerr/codeword/coefficients.hpp"
#include "gkpkerr/codeword/params.hpp"
#include "gkpkerr/numerics/policy.hpp"
#include "gkpkerr/numerics/quadrature.hpp"

namespace gkpkerr {

/// Below this 𝒩_± the superposition is rejected as degenerate.
inline constexpr double kPmNormFloor = 1e-6;

/// A conditionally prepared approximate codeword.
///
/// The One state is the homodyne-conditioned mode itself:
///   phi_1(q) = pi^{-1/2} N sum_n mu_n exp(-q^2/2 + i pi n tau q)
///   psi_1(p) = pi^{-1/2} N sum_n mu_n exp(-(p - pi n tau)^2 / 2)
/// Zero is One translated by +theta in q (phi_0(q) = phi_1(q - theta),
/// psi_0(p) = e^{-i p theta} psi_1(p)); Plus/Minus are (Zero +- One) / N_+-.
///
/// Immutable once built.
class ApproximateCodeword {
  public:
    Label label() const noexcept { return label_; }
    const EncodingParams &params() const noexcept { return params_; }
    const CoefficientSet &coefficients() const noexcept { return coeffs_; }
    double norm_constant() const noexcept { return norm_; }
    /// N_+- for Plus/Minus, empty otherwise.
    std::optional<double> pm_norm() const noexcept { return pm_norm_; }
    /// <0~|1~> used to build Plus/Minus (empty for Zero/One).
    std::optional<std::complex<double>> zero_one_overlap() const noexcept { return overlap_; }

    std::complex<double> q_amplitude(double q) const;
    std::complex<double> p_amplitude(double p) const;
    double q_density(double q) const { return std::norm(q_amplitude(q)); }
    double p_density(double p) const { return std::norm(p_amplitude(p)); }

    /// [lo, hi] outside which the q-density is below 1e-16 of its scale.
    numerics::Interval q_support() const;
    /// Same for the p-density.
    numerics::Interval p_support() const;
    /// Highest angular frequency present in phi(q) (pi tau n_max).
    double q_bandwidth() const;

  private:
    friend ApproximateCodeword build_codeword(Label, const EncodingParams &, const numerics::TruncationPolicy &);
    ApproximateCodeword(Label label, EncodingParams params, CoefficientSet coeffs, double norm);

    std::complex<double> one_q(double q) const;
    double one_p(double p) const;

    Label label_;
    EncodingParams params_;
    CoefficientSet coeffs_;
    double norm_;
    std::optional<double> pm_norm_;
    std::optional<std::complex<double>> overlap_;
};

/// Builds any of the four approximate codewords. Throws DegenerateStateError
/// when N_+- falls below kPmNormFloor.
ApproximateCodeword build_codeword(Label label, const EncodingParams &params,
                                   const numerics::TruncationPolicy &policy = {});

/// Free-function spellings of the member evaluators.
inline std::complex<double> wavefunction_q(const ApproximateCodeword &c, double q) { return c.q_amplitude(q); }
inline std::complex<double> wavefunction_p(const ApproximateCodeword &c, double p) { return c.p_amplitude(p); }

/// <0~|1~> = \int conj(phi_1(q - theta)) phi_1(q) dq in closed form:
///   e^{-theta^2/4} / S * sum_{n,n'} mu_n mu_n' e^{-(pi tau)^2 (n-n')^2 / 4} e^{i pi tau theta (n+n')/2}
/// with S the normalization pair sum.
std::complex<double> overlap_zero_one(const EncodingParams &params, const numerics::TruncationPolicy &policy = {});
std::complex<double> overlap_zero_one(const CoefficientSet &coeffs, double tau);

/// Integrals of |phi|^2 and |psi|^2 over their supports.
double q_norm_squared(const ApproximateCodeword &c, const numerics::QuadratureSpec &spec = {});
double p_norm_squared(const ApproximateCodeword &c, const numerics::QuadratureSpec &spec = {});

/// Support of c split into pieces short enough to resolve its oscillations.
std::vector<numerics::Interval> q_pieces(const ApproximateCodeword &c, double extra_frequency = 0.0);
std::vector<numerics::Interval> p_pieces(const ApproximateCodeword &c);

}  // namespace gkpkerr
