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

#include <vector>

#include "gkpkerr/codeword/params.hpp"
#include "gkpkerr/numerics/policy.hpp"

namespace gkpkerr {

/// Fock-index amplitudes mu_n(alpha, x) = rho_n e^{-(alpha^2 + x^2)/2},
/// rho_n = alpha^n H_n(x) / (2^{n/2} n!), truncated at n_max.
struct CoefficientSet {
    std::vector<double> mu;
    int n_max = 0;
    double alpha = 0.0;
    double x = 0.0;

    double sum_squares() const;
    double sum_abs() const;
};

/// Computes mu_n in the stable form
///   mu_n = pi^{1/4} (e^{-alpha^2} alpha^{2n} / n!)^{1/2} h_n(x)
/// and truncates per `policy`. Throws TruncationError when hard_max_n is
/// reached first.
CoefficientSet coefficients(const EncodingParams &params, const numerics::TruncationPolicy &policy = {});
CoefficientSet coefficients(double alpha, double x, const numerics::TruncationPolicy &policy = {});

/// mu_0 .. mu_{count-1} with no truncation logic; used for convergence studies.
CoefficientSet coefficients_with_count(double alpha, double x, int count);

/// N = pi^{1/4} { sum_{n,n'} mu_n mu_n' e^{-(pi^2/4)(n-n')^2 tau^2} }^{-1/2}.
/// Off-diagonal Gaussian factors below 1e-16 are dropped. Throws
/// DegenerateStateError for an all-zero coefficient set.
double normalization_constant(const CoefficientSet &coeffs, double tau);

/// The double sum inside normalization_constant (the squared norm of the
/// unnormalized superposition, up to pi^{1/2}).
double pair_sum(const CoefficientSet &coeffs, double tau);

}  // namespace gkpkerr
