// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include <doctest.h>

#include "twobar/model.hpp"

using namespace twobar;

namespace {

bool mentions(const InvalidScenario& e, const std::string& text) {
    for (const auto& v : e.violations())
        if (v.find(text) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("member_area: sizing rule") {
    const Scenario s = Scenario::paper_default();
    CHECK(member_area(1.110, Bar::first, s) == doctest::Approx(2.220));
    CHECK(member_area(0.0, Bar::second, s) == 0.0);
    CHECK_THROWS_AS(member_area(-0.1, Bar::first, s), std::domain_error);

    Scenario p = s;
    p.redundancy = Redundancy::passive;
    p.load.impact = 1.3;
    CHECK(member_area(0.435, Bar::second, p) == doctest::Approx(1.131).epsilon(1e-3));
    CHECK(std::abs(member_area(0.435, Bar::second, p) - 1.130) <= 0.005);
    // Standby carries f; the active member does not.
    CHECK(member_area(0.435, Bar::first, p) == doctest::Approx(member_area(0.435, Bar::first, s)));
}

TEST_CASE("member_area: linear in lambda and standby scaled by f") {
    Scenario ap = Scenario::paper_default();
    ap.load.impact = 1.3;
    Scenario p = ap;
    p.redundancy = Redundancy::passive;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    for (int i = 0; i < 1000; ++i) {
        const double l = u(rng);
        REQUIRE(member_area(2.0 * l, Bar::first, ap) == doctest::Approx(2.0 * member_area(l, Bar::first, ap)));
        REQUIRE(member_area(l, Bar::second, p) == doctest::Approx(1.3 * member_area(l, Bar::second, ap)));
    }
}

TEST_CASE("usual_design_area") {
    Scenario s = Scenario::paper_default();
    CHECK(usual_design_area(2.2, Bar::first, s) == doctest::Approx(2.2));
    CHECK(usual_design_area(0.0, Bar::first, s) == 0.0);
    s.material1.mean = 1.0;
    CHECK(usual_design_area(1.0, Bar::first, s) == doctest::Approx(5.0));
}

TEST_CASE("load_fraction") {
    CHECK(load_fraction(1.0, 1.0, 10.0) == doctest::Approx(5.0));
    CHECK(load_fraction(2.0, 1.0, 9.0) == doctest::Approx(6.0));
    CHECK(load_fraction(1.0, 0.0, 7.0) == doctest::Approx(7.0));
    CHECK_THROWS_AS(load_fraction(0.0, 0.0, 7.0), std::domain_error);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const double a1 = u(rng), a2 = u(rng) + 1e-9, p = u(rng);
        REQUIRE(load_fraction(a1, a2, p) + load_fraction(a2, a1, p) == doctest::Approx(p));
    }
}

TEST_CASE("scenario validation") {
    CHECK(scenario_violations(Scenario::paper_default()).empty());
    CHECK_NOTHROW(validate_scenario(Scenario::paper_default()));

    Scenario s = Scenario::paper_default();
    s.rho12 = 1.0;
    try {
        validate_scenario(s);
        FAIL("expected rejection");
    } catch (const InvalidScenario& e) {
        CHECK(mentions(e, "rho12"));
        CHECK(mentions(e, "[0,1)"));
    }

    s = Scenario::paper_default();
    s.load.cov = 0.0;
    CHECK_THROWS_AS(validate_scenario(s), InvalidScenario);

    s = Scenario::paper_default();
    s.material1.mean = -1.0;
    s.material2.eta = 2.0;
    s.load.impact = 0.5;
    s.latent.p1 = 1.5;
    s.costs.progressive = 200.0;
    try {
        validate_scenario(s);
        FAIL("expected rejection");
    } catch (const InvalidScenario& e) {
        CHECK(e.violations().size() >= 5);
    }
}

TEST_CASE("latent reliability index") {
    LatentFailure l{1e-3, 1e-2};
    CHECK(l.beta_latent() == doctest::Approx(2.326347874).epsilon(1e-9));
    l = {1e-3, 1e-3};
    CHECK(std::abs(l.beta_latent() - 3.090) <= 0.001);
}
