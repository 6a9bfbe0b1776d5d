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

#include <array>
#include <string_view>

namespace gkpkerr {

enum class Label { Zero, One, Plus, Minus };

inline constexpr std::array<Label, 4> kAllLabels = {Label::Zero, Label::One, Label::Plus, Label::Minus};

std::string_view to_string(Label label);
Label parse_label(std::string_view text);

/// Operating point of the conditional preparation: weak-mode amplitude
/// alpha, scaled interaction time tau and homodyne outcome x.
/// The comb half-spacing theta = 1/(2 tau) is always derived from tau.
///
/// alpha = 0 is accepted as the vacuum limit.
class EncodingParams {
  public:
    EncodingParams(double alpha, double tau, double x);

    double alpha() const noexcept { return alpha_; }
    double tau() const noexcept { return tau_; }
    double x() const noexcept { return x_; }
    double theta() const noexcept { return 0.5 / tau_; }

  private:
    double alpha_;
    double tau_;
    double x_;
};

/// Scaled interaction time tau = sqrt(2) k t / pi for coupling k and time t.
double tau_from_physical(double k, double t);

}  // namespace gkpkerr
