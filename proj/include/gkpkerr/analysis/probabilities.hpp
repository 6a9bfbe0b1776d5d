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

#include <optional>

#include "gkpkerr/analysis/regions.hpp"
#include "gkpkerr/codeword/codeword.hpp"

namespace gkpkerr::analysis {

enum class Mode { FiniteTau, Asymptotic };

/// Intrinsic error probabilities at one operating point.
///
/// pi_minus / pi_plus are empty where the asymptotic ratio is 0/0.
/// pi_max is the maximum over the components that are present.
struct ProbabilityReport {
    Mode mode;
    double alpha;
    double x;
    std::optional<double> tau;  // empty in asymptotic mode
    double pi_q;
    std::optional<double> pi_minus;
    std::optional<double> pi_plus;
    double pi_max;
    double homodyne_density;
};

/// Mass of the codeword's density (on the family's axis) inside the union
/// of the family's intervals, by adaptive quadrature.
double region_mass(const ApproximateCodeword &codeword, const ErrorRegionFamily &family,
                   const numerics::QuadratureSpec &spec = {});

/// Pi_q: mass of |<q|1~>|^2 over the R^1 family. Equals the Zero-state mass
/// over R^0 by translation.
double intrinsic_error_q(const EncodingParams &params, const numerics::TruncationPolicy &policy = {},
                         const numerics::QuadratureSpec &spec = {});

/// Pi_+ or Pi_-: mass of |<p|+-~>|^2 over R^+ or R^-.
///
/// The density is psi_1(p)^2 (2 +- 2 cos(p theta)) / N_+-^2 and psi_1^2 is a
/// finite sum of Gaussians e^{-(p - c)^2}, so every term is integrated over
/// each interval in closed form (erf for the constant part, erf of a complex
/// argument for the cosine). Falls back to region_mass when theta exceeds
/// the range of the closed form.
double intrinsic_error_pm(Label label, const EncodingParams &params, const numerics::TruncationPolicy &policy = {},
                          const numerics::QuadratureSpec &spec = {});

/// Eq.-(7)-type closed form of the large-tau limit of Pi_q:
///   1/2 + (2/pi) sum_{n,k} (-1)^k (2k+1)^{-1} rho_n rho_{n+2(2k+1)} / sum_n rho_n^2.
double asymptotic_pi_q(double alpha, double x, const numerics::TruncationPolicy &policy = {});
double asymptotic_pi_q(const CoefficientSet &coeffs);

/// Large-tau limit of Pi_+-:
///   sum_k rho_{2k+1}^2 / (2 sum_k (rho_{2k+1}^2 + 2 rho_{4k+(1-+1)}^2)),
/// with rho_{4k} for Plus and rho_{4k+2} for Minus. Empty when the
/// denominator (in rho units) is below 1e-14.
std::optional<double> asymptotic_pi_pm(Label label, double alpha, double x,
                                       const numerics::TruncationPolicy &policy = {});
std::optional<double> asymptotic_pi_pm(Label label, const CoefficientSet &coeffs);

/// Finite-tau report: quadrature for Pi_q, closed form for Pi_+-.
ProbabilityReport pi_max(const EncodingParams &params, const numerics::TruncationPolicy &policy = {},
                         const numerics::QuadratureSpec &spec = {});
/// Asymptotic report from the closed forms.
ProbabilityReport pi_max_asymptotic(double alpha, double x, const numerics::TruncationPolicy &policy = {});

}  // namespace gkpkerr::analysis
