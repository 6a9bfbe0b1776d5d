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

#include "gkpkerr/codeword/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gkpkerr {

std::string_view to_string(Label label) {
    switch (label) {
        case Label::Zero: return "zero";
        case Label::One: return "one";
        case Label::Plus: return "plus";
        case Label::Minus: return "minus";
    }
    return "?";
}

Label parse_label(std::string_view text) {
    for (Label l : kAllLabels) {
        if (to_string(l) == text) return l;
    }
    throw std::invalid_argument("unknown codeword label '" + std::string(text) + "'");
}

EncodingParams::EncodingParams(double alpha, double tau, double x) : alpha_(alpha), tau_(tau), x_(x) {
    if (!std::isfinite(alpha) || alpha < 0.0) {
        throw std::invalid_argument("EncodingParams: alpha must be finite and >= 0");
    }
    if (!std::isfinite(tau) || tau <= 0.0) {
        throw std::invalid_argument("EncodingParams: tau must be finite and > 0");
    }
    if (!std::isfinite(x)) throw std::invalid_argument("EncodingParams: x must be finite");
}

double tau_from_physical(double k, double t) {
    const double kt = k * t;
    if (!std::isfinite(kt) || kt <= 0.0) {
        throw std::invalid_argument("tau_from_physical: k*t must be finite and positive");
    }
    return std::numbers::sqrt2 * kt / std::numbers::pi;
}

}  // namespace gkpkerr
