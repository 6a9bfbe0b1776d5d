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

// Randomized invariant checks. Every generator is seeded, so failures
// reproduce exactly; the seed is printed with each failing sample.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "gkpkerr/analysis/postselection.hpp"
#include "gkpkerr/analysis/probabilities.hpp"
#include "gkpkerr/analysis/regions.hpp"
#include "gkpkerr/analysis/sweep.hpp"
#include "gkpkerr/codeword/codeword.hpp"
#include "gkpkerr/codeword/coefficients.hpp"
#include "gkpkerr/errors.hpp"
#include "gkpkerr/io/dataset.hpp"

using namespace gkpkerr;
using namespace gkpkerr::analysis;

namespace {

constexpr std::uint32_t kSeed = 20260914;

struct Sampler {
    std::mt19937 rng;
    explicit Sampler(std::uint32_t seed) : rng(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
    EncodingParams params(double alpha_max = 3.0, double tau_lo = 0.5, double tau_hi = 5.0, double x_max = 1.5) {
        return EncodingParams(uniform(0.2, alpha_max), uniform(tau_lo, tau_hi), uniform(-x_max, x_max));
    }
};

std::string describe(const EncodingParams &p) {
    std::ostringstream s;
    s.precision(17);
    s << "alpha=" << p.alpha() << " tau=" << p.tau() << " x=" << p.x();
    return s.str();
}

bool contains(const ErrorRegionFamily &family, double v) {
    const auto [first, last] = family.indices_overlapping(v, v);
    for (long s = first; s <= last; ++s) {
        const auto iv = family.interval(s);
        if (iv.lo <= v && v <= iv.hi) return true;
    }
    return false;
}

// Independent summation of phi_1(q) from a coefficient set.
std::complex<double> phi_one(const CoefficientSet &c, double tau, double q) {
    std::complex<double> sum = 0.0;
    for (std::size_t n = 0; n < c.mu.size(); ++n) sum += c.mu[n] * std::polar(1.0, std::numbers::pi * double(n) * tau * q);
    return normalization_constant(c, tau) / std::sqrt(std::numbers::pi) * std::exp(-q * q / 2) * sum;
}

}  // namespace

TEST_CASE("complementary region families tile their axis") {
    Sampler s(kSeed);
    for (int trial = 0; trial < 200; ++trial) {
        const double theta = s.uniform(0.05, 5.0);
        const auto one = error_regions(Label::One, theta);
        const auto zero = error_regions(Label::Zero, theta);
        const auto minus = error_regions(Label::Minus, theta);
        const auto plus = error_regions(Label::Plus, theta);
        for (int k = 0; k < 20; ++k) {
            const double q = s.uniform(-60.0, 60.0);
            const double p = s.uniform(-600.0, 600.0);
            CAPTURE(theta);
            CAPTURE(q);
            CHECK(contains(one, q) != contains(zero, q));
            CHECK(contains(minus, p) != contains(plus, p));
        }
        // shared endpoints, no gaps
        for (long i = -3; i <= 3; ++i) {
            CHECK(one.interval(i).hi == doctest::Approx(zero.interval(i).lo));
            CHECK(zero.interval(i).hi == doctest::Approx(one.interval(i + 1).lo));
            CHECK(minus.interval(i).hi == doctest::Approx(plus.interval(i).lo));
        }
    }
}

TEST_CASE("error masses of complementary families sum to one") {
    Sampler s(kSeed + 1);
    for (int trial = 0; trial < 12; ++trial) {
        const auto p = s.params();
        CAPTURE(describe(p));
        for (Label label : kAllLabels) {
            try {
                const auto c = build_codeword(label, p);
                const bool on_q = label == Label::Zero || label == Label::One;
                const double a = region_mass(c, error_regions(on_q ? Label::One : Label::Minus, p.theta()));
                const double b = region_mass(c, error_regions(on_q ? Label::Zero : Label::Plus, p.theta()));
                CHECK(std::abs(a + b - 1.0) <= 1e-8);
            } catch (const DegenerateStateError &) {
            }
        }
    }
}

TEST_CASE("closed-form and quadrature Plus/Minus error masses agree") {
    Sampler s(kSeed + 2);
    for (int trial = 0; trial < 12; ++trial) {
        const auto p = s.params();
        CAPTURE(describe(p));
        for (Label label : {Label::Plus, Label::Minus}) {
            try {
                const double quad = region_mass(build_codeword(label, p), error_regions(label, p.theta()));
                CHECK(std::abs(intrinsic_error_pm(label, p) - quad) <= 1e-8);
            } catch (const DegenerateStateError &) {
            }
        }
    }
}

TEST_CASE("probabilities lie in [0, 1]") {
    Sampler s(kSeed + 3);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = s.params(4.0, 0.2, 10.0, 3.0);
        CAPTURE(describe(p));
        const auto asym = pi_max_asymptotic(p.alpha(), p.x());
        for (double v : {asym.pi_q, asym.pi_max}) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        for (const auto &v : {asym.pi_minus, asym.pi_plus}) {
            if (v) CHECK((*v >= 0.0 && *v <= 1.0));
        }
        CHECK(asym.homodyne_density >= 0.0);
        if (trial % 4 == 0) {
            const double q = intrinsic_error_q(p);
            CHECK((q >= 0.0 && q <= 1.0));
            for (Label label : {Label::Plus, Label::Minus}) {
                try {
                    const double v = intrinsic_error_pm(label, p);
                    CHECK((v >= 0.0 && v <= 1.0));
                } catch (const DegenerateStateError &) {
                }
            }
        }
    }
}

TEST_CASE("success probability is non-increasing in z") {
    Sampler s(kSeed + 4);
    for (int trial = 0; trial < 6; ++trial) {
        const double alpha = s.uniform(0.5, 5.0);
        std::vector<double> zs{0.0};
        for (int k = 0; k < 8; ++k) zs.push_back(zs.back() + s.uniform(0.01, 10.0));
        double previous = 1.0 + 1e-12;
        for (double z : zs) {
            const double p = success_probability(z, alpha);
            CAPTURE(alpha);
            CAPTURE(z);
            CHECK(p <= previous + 1e-12);
            CHECK(p >= 0.0);
            previous = p;
        }
    }
}

TEST_CASE("doubling n_max changes wavefunction values by less than 1e-10") {
    Sampler s(kSeed + 5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = s.params(5.0, 0.5, 5.0, 2.0);
        CAPTURE(describe(p));
        const auto c = coefficients(p);
        const auto doubled = coefficients_with_count(p.alpha(), p.x(), 2 * (c.n_max + 1));
        const auto one = build_codeword(Label::One, p);
        double worst = 0.0;
        for (double q = -3.0; q <= 3.0; q += 0.05) {
            worst = std::max(worst, std::abs(phi_one(doubled, p.tau(), q) - one.q_amplitude(q)));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("repeated evaluation is bit-identical") {
    Sampler s(kSeed + 6);
    for (int trial = 0; trial < 5; ++trial) {
        const auto p = s.params();
        const auto a = pi_max(p);
        const auto b = pi_max(p);
        CHECK(a.pi_q == b.pi_q);
        CHECK(a.pi_minus == b.pi_minus);
        CHECK(a.pi_plus == b.pi_plus);
        const auto c1 = build_codeword(Label::Plus, p);
        const auto c2 = build_codeword(Label::Plus, p);
        CHECK(q_norm_squared(c1) == q_norm_squared(c2));
    }
    std::vector<double> xs;
    for (int i = 0; i < 40; ++i) xs.push_back(-2.0 + 0.1 * i);
    const auto serial = sweep_x(2.5, xs, {}, 1);
    const auto threaded = sweep_x(2.5, xs, {}, 4);
    CHECK(serial.rows == threaded.rows);
    const std::vector<double> zs{0.0, 2.0, 5.0, 27.0};
    CHECK(sweep_z(2.0, zs, {}, {}, 1).rows == sweep_z(2.0, zs, {}, {}, 3).rows);
}

TEST_CASE("datasets re-parse to identical values") {
    Sampler s(kSeed + 7);
    for (int trial = 0; trial < 20; ++trial) {
        io::Dataset d;
        d.schema = "property.v1";
        d.add_provenance("trial", std::to_string(trial));
        d.columns = {"a", "b", "c"};
        for (int r = 0; r < 10; ++r) {
            std::vector<double> row;
            for (int c = 0; c < 3; ++c) {
                const double mag = std::pow(10.0, s.uniform(-300.0, 300.0));
                row.push_back(s.uniform(0.0, 1.0) < 0.05 ? std::numeric_limits<double>::quiet_NaN()
                                                         : (s.uniform(0, 1) < 0.5 ? -mag : mag));
            }
            d.rows.push_back(row);
        }
        for (auto format : {io::Format::Csv, io::Format::Json}) {
            std::ostringstream first;
            io::write(first, d, format);
            std::istringstream in(first.str());
            const auto parsed = io::parse(in, format);
            std::ostringstream second;
            io::write(second, parsed, format);
            CHECK(first.str() == second.str());
            if (format == io::Format::Json) {
                for (std::size_t r = 0; r < d.rows.size(); ++r) {
                    for (std::size_t c = 0; c < 3; ++c) {
                        const double x = d.rows[r][c];
                        const double y = parsed.rows[r][c];
                        CHECK(((std::isnan(x) && std::isnan(y)) || x == y));
                    }
                }
            }
        }
    }
}
