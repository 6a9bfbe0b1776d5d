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
#include "gkpkerr/errors.hpp"
#include "gkpkerr/numerics/gaussian.hpp"
#include "gkpkerr/numerics/hermite.hpp"
#include "gkpkerr/numerics/policy.hpp"
#include "gkpkerr/numerics/quadrature.hpp"

using namespace gkpkerr;
using namespace gkpkerr::numerics;

TEST_CASE("physicists' Hermite polynomials match closed forms") {
    for (double x : {-2.5, -0.3, 0.0, 0.7, 3.1}) {
        CHECK(hermite_physicists(0, x) == 1.0);
        CHECK(hermite_physicists(1, x) == doctest::Approx(2 * x));
        CHECK(hermite_physicists(3, x) == doctest::Approx(8 * x * x * x - 12 * x));
        CHECK(hermite_physicists(4, x) == doctest::Approx(16 * std::pow(x, 4) - 48 * x * x + 12));
    }
    CHECK_THROWS_AS(hermite_physicists(-1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(hermite_physicists(400, 50.0), std::overflow_error);
}

TEST_CASE("normalized Hermite functions") {
    SUBCASE("agree with the scaled polynomials at low order") {
        for (int n = 0; n <= 12; ++n) {
            for (double x : {-1.7, 0.4, 2.2}) {
                const double scale = std::pow(std::numbers::pi, -0.25) / std::sqrt(std::ldexp(std::tgamma(n + 1.0), n));
                CHECK(hermite_normalized(n, x) == doctest::Approx(scale * hermite_physicists(n, x) * std::exp(-x * x / 2)));
            }
        }
    }
    SUBCASE("are orthonormal") {
        for (int m = 0; m <= 8; ++m) {
            for (int n = m; n <= 8; ++n) {
                const auto r = integrate_adaptive([&](double x) { return hermite_normalized(m, x) * hermite_normalized(n, x); },
                                                  uniform_pieces(-12, 12, 1.0));
                CHECK(r.value == doctest::Approx(m == n ? 1.0 : 0.0).epsilon(1e-10).scale(1.0));
            }
        }
    }
    SUBCASE("stay finite and consistent at high order and large argument") {
        const auto seq = hermite_normalized_sequence(500, 30.0);
        REQUIRE(seq.size() == 501);
        for (double v : seq) CHECK(std::isfinite(v));
        CHECK(seq[500] == doctest::Approx(hermite_normalized(500, 30.0)).epsilon(1e-12));
        CHECK(seq[0] == doctest::Approx(std::pow(std::numbers::pi, -0.25) * std::exp(-450.0)).epsilon(1e-12));
        CHECK(std::abs(seq[500]) > 1e-3);
    }
    CHECK_THROWS_AS(hermite_normalized(-2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(hermite_normalized(2, NAN), std::invalid_argument);
}

TEST_CASE("Gaussian interval mass") {
    CHECK(gaussian_interval_mass(0.3, -INFINITY, INFINITY) == doctest::Approx(1.0));
    CHECK(gaussian_interval_mass(0.0, 0.0, 1.0) == doctest::Approx(0.5 * std::erf(1.0)));
    // far tails keep relative precision
    CHECK(gaussian_interval_mass(0.0, 20.0, 21.0) == doctest::Approx(0.5 * (std::erfc(20.0) - std::erfc(21.0))).epsilon(1e-12));
    CHECK(gaussian_interval_mass(0.0, -21.0, -20.0) == doctest::Approx(0.5 * std::erfc(20.0)).epsilon(1e-12));
    CHECK(gaussian_interval_mass(1.0, 1.0, 1.0) == 0.0);
    CHECK_THROWS_AS(gaussian_interval_mass(0.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("modulated Gaussian interval mass matches direct quadrature") {
    struct Case {
        double c, a, b, omega;
    };
    for (const auto &[c, a, b, omega] : {Case{0.0, -1.0, 2.0, 0.5}, Case{3.0, 2.5, 4.0, 2.0}, Case{-5.0, -8.0, -1.0, 6.0},
                                         Case{1.0, -30.0, 30.0, 12.0}, Case{0.2, 0.1, 0.15, 11.0}, Case{4.0, 0.0, 1.0, 9.0}}) {
        CAPTURE(c);
        CAPTURE(omega);
        const auto expected = integrate_adaptive(
            [&](double p) { return std::exp(-(p - c) * (p - c)) * std::polar(1.0, omega * p) / std::sqrt(std::numbers::pi); },
            uniform_pieces(a, b, 0.25), QuadratureSpec{1e-15, 1e-13, 4000});
        const auto got = modulated_gaussian_interval_mass(c, a, b, omega);
        CHECK(std::abs(got - expected.value) < 1e-13);
    }
    CHECK_THROWS(modulated_gaussian_interval_mass(0.0, 0.0, 1.0, kMaxModulationFrequency * 2));
}

TEST_CASE("adaptive quadrature") {
    SUBCASE("smooth integrands") {
        CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value ==
              doctest::Approx(2.0).epsilon(1e-13));
        const auto z = integrate_adaptive([](double x) { return std::polar(1.0, 3.0 * x); }, 0.0, 1.0);
        CHECK(std::abs(z.value - (std::polar(1.0, 3.0) - 1.0) / std::complex<double>(0, 3)) < 1e-13);
    }
    SUBCASE("endpoint singularity converges with subdivisions") {
        const auto r = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
        CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
    }
    SUBCASE("exhausted budget reports the best estimate") {
        QuadratureSpec spec{1e-14, 1e-14, 3};
        try {
            integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, spec);
            FAIL("expected QuadratureError");
        } catch (const QuadratureError &e) {
            CHECK(e.best_estimate() == doctest::Approx(2.0).epsilon(0.05));
            CHECK(e.error_estimate() > 0.0);
        }
    }
    SUBCASE("non-finite integrand") {
        CHECK_THROWS_AS(integrate_adaptive([](double) { return NAN; }, 0.0, 1.0), NumericalError);
    }
    SUBCASE("uniform pieces cover the interval") {
        const auto pieces = uniform_pieces(-1.0, 2.0, 0.4);
        REQUIRE(pieces.size() == 8);
        CHECK(pieces.front().lo == -1.0);
        CHECK(pieces.back().hi == 2.0);
        for (std::size_t i = 1; i < pieces.size(); ++i) CHECK(pieces[i].lo == pieces[i - 1].hi);
    }
}

TEST_CASE("policy validation") {
    CHECK_NOTHROW(QuadratureSpec{}.validate());
    CHECK_THROWS_AS((QuadratureSpec{0.0, 0.0, 10}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((QuadratureSpec{1e-10, 1e-9, 0}.validate()), std::invalid_argument);
    CHECK_NOTHROW(TruncationPolicy{}.validate());
    CHECK_THROWS_AS((TruncationPolicy{1.0, 10}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((TruncationPolicy{1e-12, 0}.validate()), std::invalid_argument);
}
