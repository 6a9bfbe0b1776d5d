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

#include "gkpkerr/analysis/sweep.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gkpkerr/analysis/postselection.hpp"

namespace gkpkerr::analysis {

namespace {

constexpr double kAbsent = std::numeric_limits<double>::quiet_NaN();

double or_absent(const std::optional<double> &v) { return v ? *v : kAbsent; }

void check_axis(std::span<const double> values, const char *name) {
    if (values.empty()) throw std::invalid_argument(std::string("sweep: empty ") + name + " grid");
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] > values[i - 1])) {
            throw std::invalid_argument(std::string("sweep: ") + name + " grid must be strictly increasing");
        }
    }
}

}  // namespace

void SweepTable::validate() const {
    for (std::size_t i = 1; i < axis_values.size(); ++i) {
        if (!(axis_values[i] > axis_values[i - 1])) throw std::invalid_argument("SweepTable: axis not increasing");
    }
    if (rows.size() != axis_values.size()) throw std::invalid_argument("SweepTable: row count != axis length");
    for (const auto &row : rows) {
        if (row.size() != columns.size()) throw std::invalid_argument("SweepTable: ragged row");
    }
}

SweepTable sweep_x(double alpha, std::span<const double> x_values, const numerics::TruncationPolicy &policy,
                   unsigned threads) {
    check_axis(x_values, "x");
    SweepTable table{"x", {x_values.begin(), x_values.end()},
                     {"pi_q_inf", "pi_minus_inf", "pi_plus_inf", "pi_max_inf", "homodyne_density"}, {}};
    table.rows = parallel_map<std::vector<double>>(x_values.size(), threads, [&](std::size_t i) {
        const auto r = pi_max_asymptotic(alpha, x_values[i], policy);
        return std::vector<double>{r.pi_q, or_absent(r.pi_minus), or_absent(r.pi_plus), r.pi_max, r.homodyne_density};
    });
    return table;
}

SweepTable sweep_z(double alpha, std::span<const double> z_values, const numerics::QuadratureSpec &spec,
                   const numerics::TruncationPolicy &policy, unsigned threads) {
    check_axis(z_values, "z");
    SweepTable table{"z", {z_values.begin(), z_values.end()}, {"success_P", "mean_Pi"}, {}};
    table.rows = parallel_map<std::vector<double>>(z_values.size(), threads, [&](std::size_t i) {
        const double z = z_values[i];
        const double success = success_probability(z, alpha, spec, policy);
        const double mean = success > 0.0 ? mean_intrinsic_error(z, alpha, spec, policy) : kAbsent;
        return std::vector<double>{success, mean};
    });
    return table;
}

SweepTable sweep_tau(double alpha, double x, std::span<const double> tau_values, const numerics::QuadratureSpec &spec,
                     const numerics::TruncationPolicy &policy, unsigned threads) {
    check_axis(tau_values, "tau");
    const double limit = pi_max_asymptotic(alpha, x, policy).pi_max;
    SweepTable table{"tau", {tau_values.begin(), tau_values.end()},
                     {"pi_q", "pi_minus", "pi_plus", "pi_max", "pi_max_inf"}, {}};
    table.rows = parallel_map<std::vector<double>>(tau_values.size(), threads, [&](std::size_t i) {
        const EncodingParams params(alpha, tau_values[i], x);
        const double q = intrinsic_error_q(params, policy, spec);
        double minus = kAbsent;
        double plus = kAbsent;
        try {
            minus = intrinsic_error_pm(Label::Minus, params, policy, spec);
        } catch (const DegenerateStateError &) {
        }
        try {
            plus = intrinsic_error_pm(Label::Plus, params, policy, spec);
        } catch (const DegenerateStateError &) {
        }
        double worst = q;
        if (!std::isnan(minus)) worst = std::max(worst, minus);
        if (!std::isnan(plus)) worst = std::max(worst, plus);
        return std::vector<double>{q, minus, plus, worst, limit};
    });
    return table;
}

}  // namespace gkpkerr::analysis
