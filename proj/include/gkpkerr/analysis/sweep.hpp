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

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "gkpkerr/analysis/probabilities.hpp"

namespace gkpkerr::analysis {

/// Evaluates fn(i) for i in [0, count) on up to `threads` workers and
/// returns the results in index order. If any call throws, the exception
/// of the lowest failing index is rethrown after all workers finish.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned threads, const std::function<T(std::size_t)> &fn) {
    std::vector<T> out(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n_workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_workers);
        for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    }
    for (auto &e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

/// Sweep results: one row of `columns` per axis value. Absent entries are NaN.
struct SweepTable {
    std::string axis_name;
    std::vector<double> axis_values;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    /// Throws std::invalid_argument unless the axis is strictly increasing
    /// and every row has one entry per column.
    void validate() const;
};

/// Asymptotic probabilities versus x:
/// columns pi_q_inf, pi_minus_inf, pi_plus_inf, pi_max_inf, homodyne_density.
SweepTable sweep_x(double alpha, std::span<const double> x_values, const numerics::TruncationPolicy &policy = {},
                   unsigned threads = 1);

/// Post-selection statistics versus z: columns success_P, mean_Pi.
SweepTable sweep_z(double alpha, std::span<const double> z_values, const numerics::QuadratureSpec &spec = {},
                   const numerics::TruncationPolicy &policy = {}, unsigned threads = 1);

/// Finite-tau probabilities versus tau at fixed (alpha, x):
/// columns pi_q, pi_minus, pi_plus, pi_max, pi_max_inf.
SweepTable sweep_tau(double alpha, double x, std::span<const double> tau_values,
                     const numerics::QuadratureSpec &spec = {}, const numerics::TruncationPolicy &policy = {},
                     unsigned threads = 1);

}  // namespace gkpkerr::analysis
