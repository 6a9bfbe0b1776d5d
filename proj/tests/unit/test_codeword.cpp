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

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "gkpkerr/codeword/codeword.hpp"
#include "gkpkerr/codeword/coefficients.hpp"
#include "gkpkerr/codeword/fourier.hpp"
#include "gkpkerr/codeword/ideal.hpp"
#include "gkpkerr/codeword/oracle.hpp"
#include "gkpkerr/codeword/params.hpp"
#include "gkpkerr/errors.hpp"
#include "oracle_values.hpp"

using namespace gkpkerr;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("labels and parameters") {
    for (Label label : kAllLabels) CHECK(parse_label(to_string(label)) == label);
    CHECK(to_string(Label::Minus) == "minus");
    CHECK_THROWS_AS(parse_label("half"), std::invalid_argument);

    const EncodingParams p(2.0, 2.0, 0.3);
    CHECK(p.theta() == 0.25);
    CHECK_THROWS_AS(EncodingParams(-0.1, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(EncodingParams(1.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(EncodingParams(1.0, 1.0, INFINITY), std::invalid_argument);
    CHECK(tau_from_physical(1.0, kPi / std::sqrt(2.0)) == doctest::Approx(1.0));
    CHECK_THROWS_AS(tau_from_physical(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("coefficients match the high-precision oracle") {
    const auto c = coefficients(2.0, 1.0);
    REQUIRE(c.mu.size() >= oracle::kMuAlpha2X1.size());
    for (std::size_t n = 0; n < oracle::kMuAlpha2X1.size(); ++n) {
        CAPTURE(n);
        CHECK(c.mu[n] == doctest::Approx(oracle::kMuAlpha2X1[n]).epsilon(1e-13));
    }
    CHECK(c.n_max + 1 == static_cast<int>(c.mu.size()));
    CHECK(normalization_constant(coefficients(2.0, 0.0), 2.0) == doctest::Approx(oracle::kNormAlpha2Tau2X0).epsilon(1e-13));
}

TEST_CASE("truncation") {
    SUBCASE("vacuum keeps a single term") {
        const auto c = coefficients(0.0, 0.7);
        CHECK(c.mu[0] == doctest::Approx(std::exp(-0.49 / 2)));
        for (std::size_t n = 1; n < c.mu.size(); ++n) CHECK(c.mu[n] == 0.0);
    }
    SUBCASE("hard maximum is reported") {
        CHECK_THROWS_AS(coefficients(10.0, 0.0, numerics::TruncationPolicy{1e-20, 60}), TruncationError);
    }
    SUBCASE("fixed counts") {
        const auto c = coefficients_with_count(1.0, 0.5, 7);
        CHECK(c.mu.size() == 7);
        CHECK(c.n_max == 6);
        CHECK_THROWS_AS(coefficients_with_count(1.0, 0.5, 0), std::invalid_argument);
    }
    SUBCASE("all-zero coefficients are degenerate") {
        CoefficientSet empty{{0.0, 0.0}, 1, 1.0, 0.0};
        CHECK_THROWS_AS(normalization_constant(empty, 1.0), DegenerateStateError);
    }
}

TEST_CASE("wavefunctions match the high-precision oracle") {
    const EncodingParams p(2.0, 2.0, 0.0);
    const auto one = build_codeword(Label::One, p);
    const auto v = one.q_amplitude(0.1);
    CHECK(std::abs(v - std::complex<double>(oracle::kPhiRe_A2T2X0_q01, oracle::kPhiIm_A2T2X0_q01)) < 1e-10);

    const auto one_p = build_codeword(Label::One, EncodingParams(1.5, 3.0, 0.4));
    CHECK(one_p.p_amplitude(3.0 * kPi).real() == doctest::Approx(oracle::kPsi_A15T3X04_pPiTau).epsilon(1e-12));
    CHECK(one_p.p_amplitude(3.0 * kPi).imag() == 0.0);

    const auto overlap = overlap_zero_one(p);
    CHECK(overlap.real() == doctest::Approx(oracle::kOverlapRe_A2T2X0).epsilon(1e-12));
    CHECK(std::abs(overlap.imag()) < 1e-15);
    CHECK(build_codeword(Label::Plus, p).zero_one_overlap().has_value());
}

TEST_CASE("derived codewords") {
    const EncodingParams p(2.0, 2.0, 0.0);
    const auto zero = build_codeword(Label::Zero, p);
    const auto one = build_codeword(Label::One, p);
    const auto plus = build_codeword(Label::Plus, p);
    const auto minus = build_codeword(Label::Minus, p);
    SUBCASE("Zero is One translated by theta in q") {
        for (double q = -3.0; q <= 3.0; q += 0.01) {
            CHECK(std::abs(zero.q_amplitude(q) - one.q_amplitude(q - 0.25)) < 1e-14);
        }
    }
    SUBCASE("Zero and One share their momentum density") {
        for (double p_ = -30.0; p_ <= 30.0; p_ += 0.37) {
            CHECK(zero.p_density(p_) == doctest::Approx(one.p_density(p_)).epsilon(1e-12));
        }
    }
    SUBCASE("Plus and Minus are the normalized sum and difference") {
        const double np = *plus.pm_norm();
        const double nm = *minus.pm_norm();
        const double re = plus.zero_one_overlap()->real();
        CHECK(np * np == doctest::Approx(2.0 * (1.0 + re)));
        CHECK(nm * nm == doctest::Approx(2.0 * (1.0 - re)));
        for (double q : {-1.1, 0.0, 0.13, 2.0}) {
            const auto expected = (zero.q_amplitude(q) + one.q_amplitude(q)) / np;
            CHECK(std::abs(plus.q_amplitude(q) - expected) < 1e-14);
        }
    }
    SUBCASE("all four are normalized in both quadratures") {
        for (const auto *c : {&zero, &one, &plus, &minus}) {
            CHECK(q_norm_squared(*c) == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(p_norm_squared(*c) == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    SUBCASE("momentum transform agrees with the closed form") {
        const double grid[] = {-30.0, -4 * kPi, -1.3, 0.0, 0.5, 2 * kPi, 4 * kPi, 29.9};
        for (const auto *c : {&zero, &one, &plus, &minus}) CHECK(fourier_consistency(*c, grid) < 1e-9);
    }
}

TEST_CASE("vacuum limit") {
    // With alpha = 0 only mu_0 survives: One is the ground-state Gaussian and
    // Zero is the same Gaussian displaced by theta, so Plus and Minus are the
    // (non-degenerate) even and odd superpositions of two displaced Gaussians.
    const EncodingParams p(0.0, 2.0, 0.0);
    const auto one = build_codeword(Label::One, p);
    const auto zero = build_codeword(Label::Zero, p);
    for (double q : {-2.0, -0.5, 0.0, 0.8, 2.5}) {
        CHECK(one.q_density(q) == doctest::Approx(std::exp(-q * q) / std::sqrt(kPi)).epsilon(1e-13));
        CHECK(zero.q_density(q) == doctest::Approx(one.q_density(q - 0.25)).epsilon(1e-13));
    }
    const auto minus = build_codeword(Label::Minus, p);
    REQUIRE(minus.pm_norm().has_value());
    CHECK(*minus.pm_norm() == doctest::Approx(std::sqrt(2.0 * (1.0 - std::exp(-0.25 * 0.25 / 4.0)))));
    CHECK(q_norm_squared(minus) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("Minus degenerates when Zero and One coincide") {
    // theta = 5e-7: the two translates overlap to within 1e-13.
    CHECK_THROWS_AS(build_codeword(Label::Minus, EncodingParams(0.0, 1e6, 0.0)), DegenerateStateError);
    CHECK_NOTHROW(build_codeword(Label::Plus, EncodingParams(0.0, 1e6, 0.0)));
}

TEST_CASE("coherent-superposition oracle") {
    for (const auto &p : {EncodingParams(0.5, 1.0, 0.0), EncodingParams(2.0, 5.0, 1.0), EncodingParams(1.0, 2.0, 0.5)}) {
        const auto oracle = coherent_superposition_oracle(p);
        const auto one = build_codeword(Label::One, p);
        CHECK(fidelity(oracle, one) == doctest::Approx(1.0).epsilon(1e-10));
        for (double q : {-0.7, 0.0, 0.31}) CHECK(std::abs(oracle.q_amplitude(q) - one.q_amplitude(q)) < 1e-9);
        for (double pp : {-1.0, 0.0, kPi * p.tau()}) CHECK(std::abs(oracle.p_amplitude(pp) - one.p_amplitude(pp)) < 1e-9);
    }
    CHECK(std::abs(coherent_overlap({0.3, 0.1}, {0.3, 0.1}) - 1.0) < 1e-15);
    CHECK(std::abs(coherent_overlap(0.0, 1.0)) == doctest::Approx(std::exp(-0.5)));
}

TEST_CASE("ideal codeword combs") {
    const double theta = 0.25;
    const auto zero = ideal_model(Label::Zero, theta);
    const auto one = ideal_model(Label::One, theta);
    const auto plus = ideal_model(Label::Plus, theta);
    const auto minus = ideal_model(Label::Minus, theta);
    CHECK(zero.q_peaks.position(1) == doctest::Approx(2 * theta));
    CHECK(one.q_peaks.position(0) == doctest::Approx(theta));
    CHECK(one.p_peaks.sign(1) == -1);
    CHECK(zero.p_peaks.sign(1) == 1);
    CHECK(plus.q_peaks.spacing == doctest::Approx(theta));
    CHECK(minus.q_peaks.sign(1) == -1);
    CHECK(plus.p_peaks.spacing == doctest::Approx(2 * kPi / theta));
    CHECK(minus.p_peaks.position(0) == doctest::Approx(kPi / theta));
}

TEST_CASE("approximate One peaks sit on the ideal momentum comb") {
    // alpha = tau = 2, x = 0: momentum spikes at multiples of pi/theta = 4 pi.
    const auto one = build_codeword(Label::One, EncodingParams(2.0, 2.0, 0.0));
    const auto ideal = ideal_model(Label::One, 0.25);
    for (long s = 0; s <= 2; ++s) {
        const double peak = ideal.p_peaks.position(s);
        CHECK(one.p_density(peak) > one.p_density(peak - 0.05));
        CHECK(one.p_density(peak) > one.p_density(peak + 0.05));
    }
}
