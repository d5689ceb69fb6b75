// SPDX-License-Identifier: Apache-2.0
//
// mmoutage: outage analysis of finite wireless networks with randomly
// selected Gamma interference distributions
// Copyright (C) 2026 The mmoutage authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <doctest.h>

#include <cmath>
#include <iomanip>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "mmoutage/specialfn.hpp"
#include "oracles.hpp"

using namespace mmoutage;

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double rel_err(double got, double want)
{
    return std::fabs(got - want) / std::fabs(want);
}

} // namespace

TEST_CASE("log_gamma known values")
{
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::fabs(log_gamma(2.0)) < 1e-15);
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    CHECK(log_gamma(0.5) == doctest::Approx(0.5723649429247001).epsilon(1e-14));
    CHECK(oracle::log_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-14));
}

TEST_CASE("log_gamma rejects nonpositive arguments")
{
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
    CHECK_THROWS_AS(log_gamma(std::nan("")), std::domain_error);
}

TEST_CASE("log_gamma matches the Stirling oracle on [1e-3, 1e6]")
{
    std::mt19937_64 rng(11);
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const double x = std::pow(10.0, uniform(rng, -3.0, 6.0));
        const double want = oracle::log_gamma(x);
        // ln Gamma vanishes at 1 and 2; measure relative to max(|value|, 1) there.
        const double err = std::fabs(log_gamma(x) - want) / std::max(std::fabs(want), 1.0);
        worst = std::max(worst, err);
    }
    MESSAGE("worst log_gamma error " << worst);
    CHECK(worst <= 1e-12);
}

TEST_CASE("erlang_cdf examples")
{
    CHECK(erlang_cdf(0.0, 3, 2.0) == 0.0);
    CHECK(erlang_cdf(std::numeric_limits<double>::infinity(), 4, 1.0) == 1.0);
    CHECK(erlang_cdf(1e6, 4, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(erlang_cdf(1.0, 1, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
    CHECK_THROWS_AS(erlang_cdf(-0.1, 2, 1.0), std::domain_error);
    CHECK_THROWS_AS(erlang_cdf(1.0, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS(erlang_cdf(1.0, 2, 0.0), std::domain_error);
}

TEST_CASE("erlang_cdf is bounded, nondecreasing and matches the incomplete gamma function")
{
    for (int m = 1; m <= 40; m += 3) {
        for (double rate : {0.01, 0.25, 1.0, 7.5}) {
            double prev = 0.0;
            for (int i = 0; i <= 400; ++i) {
                const double x = 1e-4 * std::pow(1.06, i);
                const double p = erlang_cdf(x, m, rate);
                REQUIRE(p >= 0.0);
                REQUIRE(p <= 1.0);
                REQUIRE(p >= prev);
                prev = p;
                CHECK(std::fabs(p - oracle::gamma_cdf(x, m, rate)) < 5e-14);
            }
        }
    }
}

TEST_CASE("gauss_2f1 closed forms")
{
    CHECK(gauss_2f1(2.0, 5.0, 5.0, -0.5) == doctest::Approx(4.0 / 9.0).epsilon(1e-14));
    CHECK(gauss_2f1(1.0, 1.0, 2.0, -1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(oracle::hyp2f1_pfaff_series(1.0, 1.0, 2.0, -1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));

    // 2F1(1, 1; 2; z) = -ln(1 - z) / z across many magnitudes.
    for (double z : {-1e-8, -0.3, -0.99, -1.0, -3.0, -57.0, -1e3, -1e4, -1e7, -1e12}) {
        const double want = -std::log1p(-z) / z;
        CHECK(rel_err(gauss_2f1(1.0, 1.0, 2.0, z), want) < 1e-13);
    }
    // 2F1(a, b; b; z) = (1 - z)^(-a)
    for (double z : {-0.2, -5.0, -800.0}) {
        CHECK(rel_err(gauss_2f1(3.5, 2.25, 2.25, z), std::pow(1.0 - z, -3.5)) < 1e-13);
    }
    // Positive arguments: 2F1(1, 1; 2; z) = -ln(1 - z) / z still holds.
    for (double z : {0.1, 0.5, 0.9, 0.999999}) {
        CHECK(rel_err(gauss_2f1(1.0, 1.0, 2.0, z), -std::log1p(-z) / z) < 1e-13);
    }
    // Gauss's summation theorem at z = 1.
    CHECK(rel_err(gauss_2f1(0.5, 0.75, 3.0, 1.0),
                  std::tgamma(3.0) * std::tgamma(1.75) / (std::tgamma(2.5) * std::tgamma(2.25)))
          < 1e-13);
}

TEST_CASE("gauss_2f1 returns exactly one at z = 0")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i)
        CHECK(gauss_2f1(uniform(rng, -30, 30), uniform(rng, -30, 30), uniform(rng, 1e-3, 30), 0.0) == 1.0);
}

TEST_CASE("gauss_2f1 domain errors")
{
    CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 0.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, -2.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 2.0, 1.5), std::domain_error);
    CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 1.5, 1.0), std::domain_error);
    // 2F1(-1, 3; 1; z) = 1 - 3z is negative at z = 1/2.
    CHECK(gauss_2f1(-1.0, 3.0, 1.0, 0.5) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK_THROWS_AS(log_gauss_2f1(-1.0, 3.0, 1.0, 0.5), std::domain_error);
}

TEST_CASE("gauss_2f1 matches the Pfaff series oracle on the random grid")
{
    std::mt19937_64 rng(20170101);
    double worst = 0.0;
    int count = 0;
    for (int i = 0; i < 240; ++i) {
        const double a = uniform(rng, 1e-6, 20.0);
        const double b = uniform(rng, 1e-6, 20.0);
        const double c = uniform(rng, 1e-6, 25.0);
        const double z = -uniform(rng, 0.0, 1e4);
        const double want = oracle::hyp2f1_pfaff_series(a, b, c, z);
        const double got = gauss_2f1(a, b, c, z);
        const double err = rel_err(got, want);
        if (err > 1e-10)
            MESSAGE(std::setprecision(17) << "a=" << a << " b=" << b << " c=" << c << " z=" << z << " got " << got << " want " << want);
        worst = std::max(worst, err);
        ++count;
    }
    MESSAGE("worst 2F1 relative error over " << count << " points: " << worst);
    CHECK(worst <= 1e-10);
}

TEST_CASE("log_gauss_2f1 survives arguments where the value underflows")
{
    // 2F1(1, 1; 2; z) = ln(1 - z) / (-z)
    const double z = -1e300;
    CHECK(log_gauss_2f1(1.0, 1.0, 2.0, z) == doctest::Approx(std::log(std::log1p(-z) / -z)).epsilon(1e-12));
    const double big = log_gauss_2f1(45.0, 46.0, 47.0, -1e9);
    CHECK(std::isfinite(big));
    CHECK(big < -900.0);
}

TEST_CASE("compositions examples")
{
    int n = 0;
    for (const auto& c : Compositions(0, 5)) {
        CHECK(c == std::vector<int>{0, 0, 0, 0, 0});
        ++n;
    }
    CHECK(n == 1);

    std::vector<std::vector<int>> got;
    for (const auto& c : Compositions(2, 2))
        got.push_back(c);
    CHECK(got == std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});

    n = 0;
    for ([[maybe_unused]] const auto& c : Compositions(3, 20))
        ++n;
    CHECK(n == 1540);
    CHECK(composition_count(3, 20) == 1540);
    CHECK(composition_count(3, 20) + composition_count(2, 20) + composition_count(1, 20) + composition_count(0, 20)
          == 1771);
}

TEST_CASE("compositions are exhaustive and distinct for t <= 6, K <= 10")
{
    for (int t = 0; t <= 6; ++t) {
        for (int k = 1; k <= 10; ++k) {
            std::set<std::vector<int>> seen;
            std::vector<int> previous;
            for (const auto& c : Compositions(t, k)) {
                REQUIRE(static_cast<int>(c.size()) == k);
                CHECK(std::accumulate(c.begin(), c.end(), 0) == t);
                for (int part : c)
                    CHECK(part >= 0);
                if (!previous.empty()) {
                    // colexicographic: compare from the last part backwards
                    CHECK(std::lexicographical_compare(previous.rbegin(), previous.rend(), c.rbegin(), c.rend()));
                }
                previous = c;
                seen.insert(c);
            }
            CHECK(seen.size() == composition_count(t, k));
        }
    }
    CHECK_THROWS_AS(Compositions(-1, 2), std::domain_error);
    CHECK_THROWS_AS(Compositions(1, 0), std::domain_error);
}

TEST_CASE("compensated summation recovers small addends")
{
    CompensatedSum s;
    s += 1.0;
    for (int i = 0; i < 1000; ++i)
        s += 1e-17;
    s += -1.0;
    CHECK(s.value() == doctest::Approx(1e-14).epsilon(1e-6));
}
