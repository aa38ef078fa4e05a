// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "twobar/gauss.hpp"

using namespace twobar;

namespace {

// Independent long-double reference for Phi. Power series of the integral
// near the origin, Laplace continued fraction in the tails.
long double series_cdf(long double x) {
    const long double pi = 3.141592653589793238462643383279502884L;
    const long double phi = std::exp(-0.5L * x * x) / std::sqrt(2.0L * pi);
    if (std::fabs(x) < 3.0L) {
        long double term = x, sum = x;
        for (int k = 1; k < 400; ++k) {
            term *= x * x / (2.0L * k + 1.0L);
            sum += term;
            if (std::fabs(term) < 1e-30L * std::fabs(sum)) break;
        }
        return 0.5L + phi * sum;
    }
    const long double z = std::fabs(x);
    // Q(z) = phi / (z + 1/(z + 2/(z + 3/(z + ...)))) evaluated bottom-up.
    long double tail = z;
    for (int k = 300; k >= 1; --k) tail = z + k / tail;
    const long double q = phi / tail;
    return x > 0 ? 1.0L - q : q;
}

}  // namespace

TEST_CASE("cdf: known values") {
    CHECK(gauss::cdf(0.0) == 0.5);
    CHECK(gauss::cdf(-3.090) == doctest::Approx(1.0e-3).epsilon(1e-3));
    CHECK(std::abs(gauss::cdf(-3.268) - 5.41e-4) <= 1e-6);
    CHECK(gauss::cdf(gauss::unbounded) == 1.0);
    CHECK(gauss::cdf(-gauss::unbounded) == 0.0);
}

TEST_CASE("cdf: absolute error against series reference for |x| <= 8") {
    double worst = 0.0;
    for (int i = -8000; i <= 8000; ++i) {
        const double x = i * 1e-3;
        worst = std::max(worst, static_cast<double>(std::fabs(gauss::cdf(x) - series_cdf(x))));
    }
    CHECK(worst <= 1e-15);
}

TEST_CASE("cdf: relative error in the far tail") {
    double worst = 0.0;
    for (double x = -8.0; x >= -37.0; x -= 0.01) {
        const long double ref = series_cdf(x);
        if (ref < 1e-300L) break;
        worst = std::max(worst, static_cast<double>(std::fabs((gauss::cdf(x) - ref) / ref)));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("cdf: monotone and symmetric over random points") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-40.0, 40.0);
    for (int i = 0; i < 100000; ++i) {
        const double a = u(rng), b = u(rng);
        const double lo = std::min(a, b), hi = std::max(a, b);
        REQUIRE(gauss::cdf(lo) <= gauss::cdf(hi));
        REQUIRE(std::abs(gauss::cdf(a) + gauss::cdf(-a) - 1.0) <= 1e-14);
    }
}

TEST_CASE("quantile: known values and limits") {
    CHECK(gauss::quantile(0.5) == 0.0);
    CHECK(gauss::quantile(1e-3) == doctest::Approx(-3.090232306167814).epsilon(1e-14));
    CHECK(gauss::quantile(0.0) == -gauss::unbounded);
    CHECK(gauss::quantile(1.0) == gauss::unbounded);
    CHECK_THROWS_AS(gauss::quantile(-0.1), std::domain_error);
    CHECK_THROWS_AS(gauss::quantile(1.5), std::domain_error);
    CHECK_THROWS_AS(gauss::quantile(std::nan("")), std::domain_error);
}

TEST_CASE("quantile: round trip within 1e-12 relative") {
    const double p = 2.5e-7;
    CHECK(std::abs(gauss::cdf(gauss::quantile(p)) - p) <= 1e-12 * p);
    double worst = 0.0;
    for (double e = -15.0; e <= -0.3011; e += 0.001) {
        const double q = std::pow(10.0, e);
        worst = std::max(worst, std::abs(gauss::cdf(gauss::quantile(q)) - q) / q);
        const double c = 1.0 - q;  // upper half, exactly representable complement
        worst = std::max(worst, std::abs(gauss::cdf(gauss::quantile(c)) - c) / c);
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("beta/pf conversions") {
    CHECK(gauss::beta_to_pf(0.0) == 0.5);
    CHECK(gauss::beta_to_pf(gauss::unbounded) == 0.0);
    CHECK(gauss::pf_to_beta(1.63e-3) == doctest::Approx(2.942).epsilon(0.005 / 2.942));
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5.5, 8.0);
    for (int i = 0; i < 100000; ++i) {
        const double b = u(rng);
        REQUIRE(std::abs(gauss::pf_to_beta(gauss::beta_to_pf(b)) - b) <= 1e-9);
    }
}

TEST_CASE("beta/pf conversions: accuracy near p = 1 is limited by double spacing") {
    // p = Phi(-beta) rounds to a multiple of 2^-53 near 1, so beta can only be
    // recovered to about 2^-53 / phi(beta).
    const double pi = 3.141592653589793;
    for (double b = -8.0; b <= -5.5; b += 0.001) {
        const double density = std::exp(-0.5 * b * b) / std::sqrt(2.0 * pi);
        const double limit = 2.0 * std::ldexp(1.0, -53) / density;
        REQUIRE(std::abs(gauss::pf_to_beta(gauss::beta_to_pf(b)) - b) <= limit + 1e-9);
    }
}
