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

#include "gkpkerr/codeword/params.hpp"

namespace gkpkerr {

enum class PeakSign { AllPositive, Alternating };

/// Peaks at offset + spacing * s for every integer s; with Alternating the
/// peak at index s carries sign (-1)^s.
struct PeakComb {
    double offset;
    double spacing;
    PeakSign sign_rule;

    double position(long s) const { return offset + spacing * double(s); }
    int sign(long s) const { return sign_rule == PeakSign::Alternating && (s % 2 != 0) ? -1 : 1; }
};

/// Infinitely squeezed comb structure of the ideal codewords.
struct IdealCodewordModel {
    Label label;
    double theta;
    PeakComb q_peaks;
    PeakComb p_peaks;
};

IdealCodewordModel ideal_model(Label label, double theta);

}  // namespace gkpkerr
