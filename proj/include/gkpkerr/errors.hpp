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

#include <stdexcept>
#include <string>

namespace gkpkerr {

/// Raised when a computation cannot reach its accuracy target.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Adaptive quadrature ran out of subdivisions. Carries the best estimate.
class QuadratureError : public NumericalError {
  public:
    QuadratureError(const std::string &what, double best_estimate, double error_estimate)
        : NumericalError(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

  private:
    double best_estimate_;
    double error_estimate_;
};

/// The Fock-index cutoff hit its hard maximum before the tail bound was met.
class TruncationError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

/// A state or ratio is undefined for the requested parameters
/// (e.g. the Minus codeword when |0~> and |1~> nearly coincide).
class DegenerateStateError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

}  // namespace gkpkerr
