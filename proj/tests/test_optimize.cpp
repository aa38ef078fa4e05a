// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>

#include <doctest.h>

#include "twobar/cost.hpp"
#include "twobar/optimize.hpp"

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

double grid_min_total(const Scenario& s, int n, double hi) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            best = std::min(best, risk_objective({hi * i / (n - 1), hi * j / (n - 1)}, s).total);
    return best;
}

}  // namespace

TEST_CASE("ro: symmetric reference case") {
    const auto r = ro_optimize(with(1e-3, 0, 1));
    CHECK(r.converged);
    CHECK(std::abs(r.best.lambda1 - 1.110) <= 0.05);
    CHECK(std::abs(r.best.lambda2 - 1.110) <= 0.05);
    CHECK(std::abs(r.costs.total - 1.232) <= 0.01);
    for (const auto& m : r.local_minima) CHECK(r.costs.total <= m.total + 1e-9);
}

TEST_CASE("ro: mirror optima reported canonically with their mirror") {
    const auto r = ro_optimize(with(1e-3, 0, 1.3));
    CHECK(r.best.lambda1 <= r.best.lambda2);
    CHECK(std::abs(r.best.lambda1 - 0.512) <= 0.05);
    CHECK(std::abs(r.best.lambda2 - 1.717) <= 0.05);
    for (const auto& m : r.local_minima) {
        bool mirrored = false;
        for (const auto& o : r.local_minima)
            mirrored = mirrored || (std::abs(o.design.lambda1 - m.design.lambda2) <= 1e-9 &&
                                    std::abs(o.design.lambda2 - m.design.lambda1) <= 1e-9);
        CHECK(mirrored);
    }
}

TEST_CASE("ro: single-bar optimum for unequal strengths") {
    Scenario s = with(1e-3, 0, 1);
    s.material1.mean = 1.0;
    s.material2.mean = 9.0;
    const auto r = ro_optimize(s);
    CHECK(r.best.lambda1 == 0.0);
    CHECK(std::abs(r.best.lambda2 - 2.219) <= 0.05);
    CHECK(std::abs(r.costs.total - 1.275) <= 0.01);
}

TEST_CASE("ro: never worse than a dense grid") {
    for (const Scenario& s : {with(1e-3, 0, 1), with(1e-2, 1, 1.3), with(1e-3, 0, 1.3, Redundancy::passive)}) {
        const auto r = ro_optimize(s);
        CHECK(r.costs.total <= grid_min_total(s, 200, 3.0) + 1e-12);
    }
}

TEST_CASE("ro: deterministic and independent of jobs") {
    const Scenario s = with(1e-2, 0, 1.3);
    RoOptions one, many;
    many.jobs = 4;
    const auto a = ro_optimize(s, one);
    const auto b = ro_optimize(s, many);
    CHECK(a.best == b.best);
    CHECK(a.costs.total == b.costs.total);
    CHECK(a.local_minima.size() == b.local_minima.size());
}

TEST_CASE("rbdo frontier: vacuous and unreachable targets") {
    const Scenario s = with(1e-3, 0, 1);
    const std::vector<double> grid{0.0, 0.5, 1.0, 2.0, 5.0};
    for (const auto& p : rbdo_frontier(s, -std::numeric_limits<double>::infinity(), grid)) {
        CHECK(p.feasible);
        CHECK(p.lambda2_required == 0.0);
    }
    // Two bars become necessary above the latent index.
    const auto pts = rbdo_frontier(s, 3.5, grid);
    for (const auto& p : pts) CHECK((!p.feasible || p.lambda2_required > 0.0));
    CHECK_THROWS_AS(rbdo_frontier(s, 3.0, {1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(rbdo_frontier(s, std::nan(""), grid), std::invalid_argument);
}

TEST_CASE("rbdo frontier: crossing on the diagonal matches a 400 x 400 grid scan") {
    const Scenario s = with(1e-3, 0, 1);
    const double target = 2.5;
    // Brute force: smallest lambda on the diagonal meeting the target,
    // from a 400 x 400 scan over [0, 2]^2.
    const int n = 400;
    const double h = 2.0 / (n - 1);
    double diag = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i == j && system_failure_probability({i * h, j * h}, s).beta_sys >= target) diag = std::min(diag, i * h);
    // The frontier at lambda1 = diag needs lambda2 close to diag.
    const auto pts = rbdo_frontier(s, target, {diag});
    REQUIRE(pts[0].feasible);
    CHECK(std::abs(pts[0].lambda2_required - diag) <= 2 * h);
    CHECK(std::abs(pts[0].beta_sys_achieved - target) <= 1e-3);
}

TEST_CASE("rbdo frontier: monotone trade-off for the symmetric case") {
    const Scenario s = with(1e-3, 0, 1);
    std::vector<double> grid;
    for (int i = 0; i <= 40; ++i) grid.push_back(0.05 * i);
    const auto pts = rbdo_frontier(s, 2.5, grid);
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].feasible && pts[i - 1].feasible)
            CHECK(pts[i].lambda2_required <= pts[i - 1].lambda2_required + 1e-5);
}

TEST_CASE("rbdo optimize") {
    const Scenario s = with(1e-3, 0, 1);
    auto r = rbdo_optimize(s, 2.942);
    CHECK(r.feasible);
    CHECK(r.breakdown.beta_sys >= 2.942 - 1e-4);
    CHECK(std::abs(r.costs.material - 1.110) <= 0.0111);

    r = rbdo_optimize(s, 4.0);
    CHECK(r.feasible);
    CHECK(r.best.lambda1 > 0.0);
    CHECK(r.best.lambda2 > 0.0);
    CHECK(r.breakdown.beta_sys >= 4.0 - 1e-4);

    r = rbdo_optimize(s, 9.0);
    CHECK_FALSE(r.feasible);
    CHECK(std::isfinite(r.max_beta_sys));
    CHECK(r.max_beta_sys < 9.0);
    CHECK_FALSE(r.diagnostics.empty());

    r = rbdo_optimize(s, -std::numeric_limits<double>::infinity());
    CHECK(r.degenerate);
    CHECK(r.best == Design{0.0, 0.0});
    r = rbdo_optimize(s, -5.0);
    CHECK(r.degenerate);
    CHECK(r.costs.material == 0.0);
}
