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

#include "gkpkerr/analysis/regions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gkpkerr::analysis {

ErrorRegionFamily::ErrorRegionFamily(Label label, double theta) : label_(label), theta_(theta) {
    if (!(theta > 0.0) || !std::isfinite(theta)) throw std::invalid_argument("error_regions: theta must be > 0");
    const bool on_q = label == Label::Zero || label == Label::One;
    axis_ = on_q ? Axis::Q : Axis::P;
    unit_ = on_q ? theta : std::numbers::pi / theta;
    const bool centred = label == Label::One || label == Label::Minus;
    start_ = (centred ? -0.5 : 0.5) * unit_;
}

numerics::Interval ErrorRegionFamily::interval(long s) const {
    const double lo = start_ + 2.0 * unit_ * double(s);
    return {lo, lo + unit_};
}

std::pair<long, long> ErrorRegionFamily::indices_overlapping(double lo, double hi) const {
    if (!(lo <= hi)) throw std::invalid_argument("indices_overlapping: requires lo <= hi");
    const double period = 2.0 * unit_;
    long first = static_cast<long>(std::floor((lo - start_ - unit_) / period));
    long last = static_cast<long>(std::ceil((hi - start_) / period));
    while (interval(first).hi < lo) ++first;
    while (interval(last).lo > hi) --last;
    return {first, last};
}

std::vector<numerics::Interval> ErrorRegionFamily::clipped(double lo, double hi) const {
    std::vector<numerics::Interval> out;
    const auto [first, last] = indices_overlapping(lo, hi);
    for (long s = first; s <= last; ++s) {
        const auto iv = interval(s);
        const double a = std::max(iv.lo, lo);
        const double b = std::min(iv.hi, hi);
        if (a < b) out.push_back({a, b});
    }
    return out;
}

ErrorRegionFamily error_regions(Label label, double theta) { return ErrorRegionFamily(label, theta); }

}  // namespace gkpkerr::analysis
