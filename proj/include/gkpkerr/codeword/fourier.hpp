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
#include <span>

#include "gkpkerr/codeword/codeword.hpp"

namespace gkpkerr {

/// (2 pi)^{-1/2} \int phi(q) e^{-ipq} dq by quadrature.
std::complex<double> numeric_fourier_transform(const ApproximateCodeword &c, double p,
                                               const numerics::QuadratureSpec &spec = {});

/// max over the grid of |numeric transform of phi - psi(p)|.
double fourier_consistency(const ApproximateCodeword &c, std::span<const double> p_grid,
                           const numerics::QuadratureSpec &spec = {});

}  // namespace gkpkerr
