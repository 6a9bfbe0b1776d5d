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
#include <vector>

#include "gkpkerr/codeword/codeword.hpp"

namespace gkpkerr {

struct CoherentComponent {
    double weight;
    std::complex<double> amplitude;
};

/// A finite superposition sum_n w_n |gamma_n> of coherent states.
///
/// Quadratures follow q = (b + b^dag)/sqrt(2), p = (b - b^dag)/(i sqrt(2)),
/// so |gamma> is centred at (sqrt(2) Re gamma, sqrt(2) Im gamma). The
/// wavefunctions returned here are normalized through the coherent-state
/// Gram matrix, independently of the Fock-sum formulas used by
/// ApproximateCodeword.
class CoherentSuperposition {
  public:
    explicit CoherentSuperposition(std::vector<CoherentComponent> components);

    const std::vector<CoherentComponent> &components() const noexcept { return components_; }
    /// sum_{m,n} w_m w_n <gamma_m|gamma_n>.
    double gram_norm_squared() const { return gram_; }

    std::complex<double> q_amplitude(double q) const;
    std::complex<double> p_amplitude(double p) const;

  private:
    std::vector<CoherentComponent> components_;
    double gram_;
};

/// <gamma_m|gamma_n> = exp(-|gamma_m|^2/2 - |gamma_n|^2/2 + conj(gamma_m) gamma_n).
std::complex<double> coherent_overlap(std::complex<double> a, std::complex<double> b);

/// Mode b after projecting the weak mode onto the homodyne eigenstate |x>:
/// sum_n mu_n |i pi n tau / sqrt(2)>. Components with vanishing weight are dropped.
CoherentSuperposition coherent_superposition_oracle(const EncodingParams &params,
                                                    const numerics::TruncationPolicy &policy = {});

/// |<oracle|codeword>| by quadrature in the q representation.
double fidelity(const CoherentSuperposition &oracle, const ApproximateCodeword &codeword,
                const numerics::QuadratureSpec &spec = {});

}  // namespace gkpkerr
