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

#include "gkpkerr/codeword/ideal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gkpkerr {

IdealCodewordModel ideal_model(Label label, double theta) {
    if (!(theta > 0.0) || !std::isfinite(theta)) throw std::invalid_argument("ideal_model: theta must be > 0");
    const double p_unit = std::numbers::pi / theta;
    switch (label) {
        case Label::Zero:
            return {label, theta, {0.0, 2.0 * theta, PeakSign::AllPositive}, {0.0, p_unit, PeakSign::AllPositive}};
        case Label::One:
            return {label, theta, {theta, 2.0 * theta, PeakSign::AllPositive}, {0.0, p_unit, PeakSign::Alternating}};
        // (|0> + |1>): q-peaks at every multiple of theta; p-peaks of |0> and
        // |1> cancel at odd s.
        case Label::Plus:
            return {label, theta, {0.0, theta, PeakSign::AllPositive}, {0.0, 2.0 * p_unit, PeakSign::AllPositive}};
        case Label::Minus:
            return {label, theta, {0.0, theta, PeakSign::Alternating}, {p_unit, 2.0 * p_unit, PeakSign::AllPositive}};
    }
    throw std::invalid_argument("ideal_model: unknown label");
}

}  // namespace gkpkerr
