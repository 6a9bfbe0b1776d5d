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

#include "gkpkerr/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ctime>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "gkpkerr/analysis/postselection.hpp"
#include "gkpkerr/analysis/probabilities.hpp"
#include "gkpkerr/analysis/sweep.hpp"
#include "gkpkerr/codeword/codeword.hpp"
#include "gkpkerr/codeword/coefficients.hpp"
#include "gkpkerr/codeword/fourier.hpp"
#include "gkpkerr/codeword/oracle.hpp"
#include "gkpkerr/errors.hpp"

#ifndef GKPKERR_VERSION
#define GKPKERR_VERSION "unknown"
#endif

namespace gkpkerr::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Default tolerances of the validate checks.
constexpr double kNormalizationTolerance = 1e-8;
constexpr double kFourierTolerance = 1e-6;
constexpr double kFidelityTolerance = 1e-8;
constexpr double kAsymptoticTolerance = 1e-3;

// Shortest text that parses back to the same double.
std::string format_real(double v) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, result.ptr};
}

numerics::QuadratureSpec quadrature(const RunConfig &config) {
    numerics::QuadratureSpec spec;
    if (config.tolerance) spec.absolute_tolerance = *config.tolerance;
    return spec;
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

io::Dataset make_dataset(const RunConfig &config, std::string schema, const std::string &n_max) {
    io::Dataset data;
    data.schema = std::move(schema);
    data.add_provenance("tool", "gkpkerr");
    data.add_provenance("version", GKPKERR_VERSION);
    data.add_provenance("command", std::string(to_string(config.command)));
    // Output location and worker count do not affect the values.
    for (const auto &[key, value] : config.raw) {
        if (key != "out" && key != "threads" && key != "no-timestamp" && key != "format") {
            data.add_provenance("param." + key, value);
        }
    }
    data.add_provenance("n_max", n_max);
    const numerics::TruncationPolicy policy;
    const auto spec = quadrature(config);
    data.add_provenance("tail_weight_bound", format_real(policy.tail_weight_bound));
    data.add_provenance("hard_max_n", std::to_string(policy.hard_max_n));
    data.add_provenance("quadrature_absolute_tolerance", format_real(spec.absolute_tolerance));
    data.add_provenance("quadrature_relative_tolerance", format_real(spec.relative_tolerance));
    if (config.timestamp) data.add_provenance("timestamp", utc_timestamp());
    return data;
}

int max_n_max(double alpha, const std::vector<double> &xs) {
    int n = 0;
    for (double x : xs) n = std::max(n, coefficients(alpha, x).n_max);
    return n;
}

void append_table(io::Dataset &data, const analysis::SweepTable &table) {
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        std::vector<double> row{table.axis_values[i]};
        row.insert(row.end(), table.rows[i].begin(), table.rows[i].end());
        data.rows.push_back(std::move(row));
    }
}

}  // namespace

io::Dataset cmd_codeword(const RunConfig &config) {
    const EncodingParams params(config.alpha.at(0), config.tau.at(0), config.x.at(0));
    const bool on_q = config.axis == analysis::Axis::Q;
    std::vector<std::optional<ApproximateCodeword>> codewords;
    for (Label label : {Label::Zero, Label::One, Label::Plus, Label::Minus}) {
        try {
            codewords.emplace_back(build_codeword(label, params));
        } catch (const DegenerateStateError &) {
            codewords.emplace_back(std::nullopt);
        }
    }
    auto data = make_dataset(config, "gkpkerr.codeword.v1", std::to_string(coefficients(params).n_max));
    data.columns = {on_q ? "q" : "p", "density_zero", "density_one", "density_plus", "density_minus"};
    for (double v : config.coordinate_grid()) {
        std::vector<double> row{v};
        for (const auto &c : codewords) row.push_back(!c ? kNaN : on_q ? c->q_density(v) : c->p_density(v));
        data.rows.push_back(std::move(row));
    }
    return data;
}

io::Dataset cmd_sweep_x(const RunConfig &config) {
    const double alpha = config.alpha.at(0);
    const auto xs = config.x_grid();
    const auto table = analysis::sweep_x(alpha, xs, {}, config.worker_count());
    auto data = make_dataset(config, "gkpkerr.sweep_x.v1", std::to_string(max_n_max(alpha, xs)));
    data.columns = {"x"};
    data.columns.insert(data.columns.end(), table.columns.begin(), table.columns.end());
    append_table(data, table);
    return data;
}

io::Dataset cmd_sweep_z(const RunConfig &config) {
    const auto spec = quadrature(config);
    std::string n_max;
    std::vector<analysis::SweepTable> tables;
    for (double alpha : config.alpha) {
        tables.push_back(analysis::sweep_z(alpha, config.z, spec, {}, config.worker_count()));
        n_max += (n_max.empty() ? "" : ",") + std::to_string(coefficients(alpha, 0.0).n_max);
    }
    auto data = make_dataset(config, "gkpkerr.sweep_z.v1", n_max + " (at x = 0, per alpha)");
    data.columns = {"z", "alpha", "success_P", "mean_Pi"};
    for (std::size_t a = 0; a < tables.size(); ++a) {
        const auto &table = tables[a];
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            data.rows.push_back({table.axis_values[i], config.alpha[a], table.rows[i][0], table.rows[i][1]});
        }
    }
    return data;
}

io::Dataset cmd_sweep_tau(const RunConfig &config) {
    const double alpha = config.alpha.at(0);
    const double x = config.x.at(0);
    const auto table = analysis::sweep_tau(alpha, x, config.tau_grid(), quadrature(config), {}, config.worker_count());
    auto data = make_dataset(config, "gkpkerr.sweep_tau.v1", std::to_string(coefficients(alpha, x).n_max));
    data.columns = {"tau"};
    data.columns.insert(data.columns.end(), table.columns.begin(), table.columns.end());
    append_table(data, table);
    return data;
}

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

ValidationReport cmd_validate(const RunConfig &config) {
    ValidationReport report;
    auto add = [&](std::string name, double measured, double bound, bool upper) {
        const bool ok = upper ? measured <= bound : measured >= bound;
        report.checks.push_back({std::move(name), measured, bound, upper, ok});
    };
    const double override_tol = config.tolerance.value_or(0.0);
    auto tol = [&](double fallback) { return config.tolerance ? override_tol : fallback; };
    numerics::QuadratureSpec spec;
    if (config.tolerance) {
        spec.absolute_tolerance = std::max(*config.tolerance, 1e-14);
        spec.relative_tolerance = std::max(*config.tolerance, 1e-14);
    }

    // Normalization of the wavefunctions on a small parameter grid, and of
    // the homodyne density.
    double worst_norm = 0.0;
    for (double alpha : {0.5, 1.0, 2.0}) {
        for (double tau : {1.0, 2.0, 5.0}) {
            for (double x : {0.0, 0.5, 1.0}) {
                const EncodingParams params(alpha, tau, x);
                for (Label label : kAllLabels) {
                    try {
                        const auto c = build_codeword(label, params);
                        worst_norm = std::max({worst_norm, std::abs(q_norm_squared(c, spec) - 1.0),
                                               std::abs(p_norm_squared(c, spec) - 1.0)});
                    } catch (const DegenerateStateError &) {
                    }
                }
            }
        }
    }
    add("normalization: |int |phi|^2 - 1|, |int |psi|^2 - 1|", worst_norm, tol(kNormalizationTolerance), true);

    double worst_density = 0.0;
    for (double alpha : {0.0, 0.5, 1.0, 2.0, 4.0}) {
        const auto window = analysis::acceptance_window(0.0, alpha);
        const auto mass = numerics::integrate_adaptive(
            [&](double x) { return analysis::homodyne_density(alpha, x); },
            numerics::uniform_pieces(window.lo, window.hi, 0.5), spec);
        worst_density = std::max(worst_density, std::abs(mass.value - 1.0));
    }
    add("normalization: |int P(x) dx - 1|", worst_density, tol(kNormalizationTolerance), true);

    const auto p_grid = config.coordinate_grid();
    double worst_fourier = 0.0;
    for (const auto &params : {EncodingParams(2.0, 2.0, 0.0), EncodingParams(1.0, 4.0, 0.5)}) {
        for (Label label : kAllLabels) {
            try {
                worst_fourier = std::max(worst_fourier, fourier_consistency(build_codeword(label, params), p_grid, spec));
            } catch (const DegenerateStateError &) {
            }
        }
    }
    add("fourier: max |F[phi](p) - psi(p)|", worst_fourier, tol(kFourierTolerance), true);

    double worst_fidelity = 0.0;
    for (double alpha : {0.5, 1.0, 2.0}) {
        for (double tau : {1.0, 2.0, 5.0}) {
            for (double x : {0.0, 0.5, 1.0}) {
                const EncodingParams params(alpha, tau, x);
                const auto oracle = coherent_superposition_oracle(params);
                const double f = fidelity(oracle, build_codeword(Label::One, params), spec);
                worst_fidelity = std::max(worst_fidelity, 1.0 - f);
            }
        }
    }
    add("oracle: 1 - fidelity with coherent superposition", worst_fidelity, tol(kFidelityTolerance), true);

    const double tau = config.tau.at(0);
    double worst_asymptotic = 0.0;
    for (double alpha : {0.5, 1.5, 3.0}) {
        for (double x : {0.0, 0.4, 1.2}) {
            const EncodingParams params(alpha, tau, x);
            worst_asymptotic = std::max(worst_asymptotic, std::abs(analysis::intrinsic_error_q(params, {}, spec) -
                                                                   analysis::asymptotic_pi_q(alpha, x)));
            for (Label label : {Label::Plus, Label::Minus}) {
                const auto limit = analysis::asymptotic_pi_pm(label, alpha, x);
                if (!limit) continue;
                try {
                    worst_asymptotic = std::max(
                        worst_asymptotic, std::abs(analysis::intrinsic_error_pm(label, params, {}, spec) - *limit));
                } catch (const DegenerateStateError &) {
                }
            }
        }
    }
    std::ostringstream name;
    name << "asymptotic: |Pi(tau = " << tau << ") - Pi_inf|";
    add(name.str(), worst_asymptotic, tol(kAsymptoticTolerance), true);

    // Reference values; these tolerances describe the precision of the
    // published numbers and are not affected by --tolerance.
    add("reference: |P(27, 2) - 0.017|", std::abs(analysis::success_probability(27.0, 2.0) - 0.017), 0.003, true);
    add("reference: |Pi(27, 2) - 0.010|", std::abs(analysis::mean_intrinsic_error(27.0, 2.0) - 0.010), 0.003, true);
    double lowest = 1.0;
    for (double alpha : {1.0, 1.5, 2.0, 3.0, 4.0, 5.0}) {
        lowest = std::min(lowest, analysis::mean_intrinsic_error(0.0, alpha));
    }
    add("reference: min over alpha of Pi(0, alpha)", lowest, 0.5 - 1e-6, false);
    double worst_threshold = 0.0;
    for (double alpha : {0.75, 1.5, 2.25}) {
        const auto t = analysis::threshold_tau(alpha, 0.02);
        worst_threshold = std::max(worst_threshold, t ? *t : std::numeric_limits<double>::infinity());
    }
    add("reference: max over alpha of threshold tau", worst_threshold, 2.1, true);
    std::vector<double> xs;
    for (int i = -300; i <= 300; ++i) xs.push_back(i / 100.0);
    const auto table = analysis::sweep_x(1.5, xs, {}, config.worker_count());
    std::size_t best = 0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (table.rows[i][3] < table.rows[best][3]) best = i;
    }
    add("reference: |argmin_x Pi_max_inf(1.5, x)|", std::abs(xs[best]), 0.2, true);
    return report;
}

void write_report(std::ostream &out, const ValidationReport &report) {
    for (const auto &c : report.checks) {
        char line[256];
        std::snprintf(line, sizeof line, "%s  %-52s measured %.6g %s %.6g\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                      c.measured, c.upper ? "<=" : ">=", c.bound);
        out << line;
    }
    out << (report.passed() ? "all checks passed" : "validation FAILED") << '\n';
}

}  // namespace gkpkerr::cli
