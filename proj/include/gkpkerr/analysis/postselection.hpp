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

#include "gkpkerr/numerics/policy.hpp"
#include "gkpkerr/numerics/quadrature.hpp"

namespace gkpkerr::analysis {

/// Homodyne outcome density P(x) = pi^{-1/2} sum_n mu_n(alpha, x)^2.
double homodyne_density(double alpha, double x, const numerics::TruncationPolicy &policy = {});

/// Acceptance window [-alpha/z, alpha/z]; z = 0 accepts every outcome and
/// maps to the range where the density is non-negligible.
numerics::Interval acceptance_window(double z, double alpha, const numerics::TruncationPolicy &policy = {});

/// P(z, alpha): probability that the homodyne outcome is accepted.
double success_probability(double z, double alpha, const numerics::QuadratureSpec &spec = {},
                           const numerics::TruncationPolicy &policy = {});

/// Pi(z, alpha): the asymptotic worst-case intrinsic error averaged over
/// accepted outcomes. The window is cut into pieces of at most
/// kMeanErrorPieceWidth before adaptive refinement so that narrow dips of
/// Pi_max(x) are not stepped over.
double mean_intrinsic_error(double z, double alpha, const numerics::QuadratureSpec &spec = {},
                            const numerics::TruncationPolicy &policy = {});

inline constexpr double kMeanErrorPieceWidth = 0.05;

/// Grid used by threshold_tau: tau = 0.1, 0.2, ..., 10.
inline constexpr int kThresholdGridPoints = 100;
inline constexpr double kThresholdGridStep = 0.1;

/// Smallest grid tau such that |Pi_max(tau', alpha, 0) - Pi_max^inf(alpha, 0)|
/// <= tolerance for tau' = tau and every larger grid point. Empty when even
/// tau = 10 misses the tolerance.
std::optional<double> threshold_tau(double alpha, double tolerance, const numerics::QuadratureSpec &spec = {},
                                    const numerics::TruncationPolicy &policy = {});

}  // namespace gkpkerr::analysis
