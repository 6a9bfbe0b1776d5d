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

#include <utility>
#include <vector>

#include "gkpkerr/codeword/params.hpp"
#include "gkpkerr/numerics/quadrature.hpp"

namespace gkpkerr::analysis {

enum class Axis { Q, P };

/// Periodic family of error intervals R_s, s in Z.
///
///   One:   [(2s - 1/2) theta, (2s + 1/2) theta]            on q
///   Zero:  [(2s + 1/2) theta, (2s + 3/2) theta]            on q
///   Minus: [(2s - 1/2) pi/theta, (2s + 1/2) pi/theta]      on p
///   Plus:  [(2s + 1/2) pi/theta, (2s + 3/2) pi/theta]      on p
class ErrorRegionFamily {
  public:
    ErrorRegionFamily(Label label, double theta);

    Label label() const noexcept { return label_; }
    double theta() const noexcept { return theta_; }
    Axis axis() const noexcept { return axis_; }
    /// Distance between consecutive intervals (2 theta or 2 pi / theta).
    double period() const noexcept { return 2.0 * unit_; }
    /// Length of each interval (theta or pi / theta).
    double width() const noexcept { return unit_; }

    numerics::Interval interval(long s) const;
    /// Smallest and largest s whose interval meets [lo, hi].
    std::pair<long, long> indices_overlapping(double lo, double hi) const;
    /// The intervals meeting [lo, hi], clipped to it, in increasing order.
    std::vector<numerics::Interval> clipped(double lo, double hi) const;

  private:
    Label label_;
    double theta_;
    Axis axis_;
    double unit_;
    double start_;  // lower end of R_0
};

ErrorRegionFamily error_regions(Label label, double theta);

}  // namespace gkpkerr::analysis
