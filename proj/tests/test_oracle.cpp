// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numeric>

#include <doctest.h>

#include "twobar/gauss.hpp"
#include "twobar/oracle.hpp"
#include "twobar/reliability.hpp"

using namespace twobar;

namespace {

Scenario with(double pl, double eta, double f, Redundancy r = Redundancy::active_passive) {
    Scenario s = Scenario::paper_default();
    s.latent = {pl, pl};
    s.material1.eta = s.material2.eta = eta;
    s.load.impact = f;
    s.redundancy = r;
    return s;
}

}  // namespace

TEST_CASE("oracle: certain connection failure") {
    for (auto r : {Redundancy::active_passive, Redundancy::passive}) {
        const auto e = simulate_system(with(1.0, 0, 1, r), {1.0, 1.0}, 1000, 1);
        CHECK(e.p_sys.value == 1.0);
        CHECK(e.p_sys.se == 0.0);
        CHECK(e.p_direct.value == 1.0);
    }
}

TEST_CASE("oracle: single-bar passive design against the analytic two-pulse series event") {
    // Bar 1 alone: fails if c1 fails, or a1 S < P1, or a1 S < P2 with the same S.
    // P[fail | S] = 1 - (1 - pL1) Phi((a1 S - muP)/sigP)^2, integrated over S.
    Scenario s = with(1e-2, 0, 1, Redundancy::passive);
    const Design d{1.5, 0.0};
    const double a1 = member_area(d.lambda1, Bar::first, s);
    const double mu = s.material1.mean, sd = s.material1.std_dev();
    const double mup = s.load.mean, sp = s.load.std_dev();
    double integral = 0.0;
    const int n = 20000;
    const double lo = -10.0, hi = 10.0, h = (hi - lo) / n;
    for (int i = 0; i <= n; ++i) {
        const double z = lo + i * h;
        const double w = (i == 0 || i == n) ? 0.5 : 1.0;
        const double phi = std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
        const double hold = gauss::cdf((a1 * (mu + sd * z) - mup) / sp);
        integral += w * h * phi * hold * hold;
    }
    const double expected = 1.0 - (1.0 - s.latent.p1) * integral;
    const auto e = simulate_system(s, d, 2'000'000, 42, 4);
    CHECK(std::abs(e.p_sys.value - expected) <= 4.0 * e.p_sys.se);
}

TEST_CASE("oracle: reproducible and independent of jobs") {
    const Scenario s = with(1e-2, 1, 1.3);
    const Design d{1.0, 1.2};
    const auto a = simulate_system(s, d, 300'000, 99, 1);
    const auto b = simulate_system(s, d, 300'000, 99, 1);
    const auto c = simulate_system(s, d, 300'000, 99, 6);
    CHECK(a.class_counts == b.class_counts);
    CHECK(a.class_counts == c.class_counts);
    CHECK(a.cost.value == c.cost.value);
    CHECK(a.cost.se == c.cost.se);
    const auto other = simulate_system(s, d, 300'000, 100, 1);
    CHECK(a.class_counts != other.class_counts);
}

TEST_CASE("oracle: classes partition the replicates") {
    for (auto r : {Redundancy::active_passive, Redundancy::passive}) {
        const auto e = simulate_system(with(1e-2, 0, 1.3, r), {0.8, 0.9}, 200'000, 5, 2);
        CHECK(std::accumulate(e.class_counts.begin(), e.class_counts.end(), std::uint64_t{0}) == e.n);
        std::uint64_t by_path = 0;
        for (const auto& p : e.paths) by_path += p.count;
        CHECK(by_path == e.n - e.class_counts[0]);
        CHECK(e.p_sys.value == doctest::Approx(e.p_progressive.value + e.p_direct.value));
        CHECK(e.cost.value >= e.material);
        CHECK(e.p_sys.se == doctest::Approx(std::sqrt(e.p_sys.value * (1 - e.p_sys.value) / e.n)));
    }
}

TEST_CASE("oracle: basic events match their closed forms") {
    const Scenario s = with(1e-3, 0, 1);
    const Design d{0.7, 0.7};
    const auto r = system_failure_probability(d, s);
    const auto e = simulate_system(s, d, 2'000'000, 3, 4);
    CHECK(std::abs(e.p_f1.value - r.p_f1) <= 4 * e.p_f1.se);
    CHECK(std::abs(e.p_joint.value - r.p_joint) <= 4 * e.p_joint.se);
    const double g21 = gauss::beta_to_pf(r.beta_2g1.base);
    CHECK(std::abs(e.p_g21.value - g21) <= 4 * e.p_g21.se);
    CHECK(std::abs(e.path("n").probability.value - 1e-6) <= 4 * std::sqrt(1e-6 / 2e6) + 1e-12);
}

TEST_CASE("oracle: standard error shrinks like 1/sqrt(n)") {
    const Scenario s = with(1e-2, 0, 1);
    const Design d{0.9, 0.9};
    double ratio = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto small = simulate_system(s, d, 100'000, seed, 2);
        const auto big = simulate_system(s, d, 200'000, seed + 1000, 2);
        ratio += big.p_sys.se / small.p_sys.se;
    }
    ratio /= 10.0;
    CHECK(ratio == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.05));
}

TEST_CASE("oracle: errors") {
    const Scenario s = Scenario::paper_default();
    CHECK_THROWS_AS(simulate_system(s, {1, 1}, 0, 1), std::domain_error);
    CHECK_THROWS_AS(simulate_system(s, {-1, 1}, 10, 1), std::domain_error);
    const auto e = simulate_system(s, {1, 1}, 10, 1);
    CHECK_THROWS_AS(e.path("zz"), std::out_of_range);
    CHECK(std::string(to_string(Outcome::direct)) == "DC");
}
