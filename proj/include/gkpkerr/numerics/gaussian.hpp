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

namespace gkpkerr::numerics {

/// Mass of the unit Gaussian pi^{-1/2} e^{-(p-center)^2} on [a, b].
/// Either bound may be infinite. Tails are taken through erfc so that
/// intervals far from the center keep full relative accuracy.
double gaussian_interval_mass(double center, double a, double b);

/// Largest |omega| accepted by modulated_gaussian_interval_mass.
inline constexpr double kMaxModulationFrequency = 12.0;

/// Integral of pi^{-1/2} e^{-(p-center)^2} e^{i omega p} over [a, b].
///
/// Completing the square gives
///   e^{i omega c - omega^2/4} [erf(b - c - i omega/2) - erf(a - c - i omega/2)] / 2.
/// The complex erf is expanded about the real axis,
///   erf(u - iy) = erf(u) - 2 pi^{-1/4} e^{-u^2/2} sum_{k>=1} i^k c_k h_{k-1}(u),
///   c_k = y^k sqrt(2^{k-1} (k-1)!) / k!,
/// with h the orthonormal Hermite functions; the series is entire and
/// converges quickly for the |omega| <= kMaxModulationFrequency accepted here.
std::complex<double> modulated_gaussian_interval_mass(double center, double a, double b, double omega);

}  // namespace gkpkerr::numerics
