// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TWOBAR_OPTIMIZE_HPP
#define TWOBAR_OPTIMIZE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "twobar/cost.hpp"
#include "twobar/model.hpp"
#include "twobar/reliability.hpp"

namespace twobar {

/// Minimal lambda2 meeting the reliability target at a given lambda1.
struct FrontierPoint {
    double lambda1 = 0.0;
    double lambda2_required = 0.0;  // NaN when infeasible
    double beta_sys_achieved = 0.0;  // best index seen when infeasible
    bool feasible = false;
    bool monotone = true;  // false if beta_sys decreased in lambda2 below the crossing
};

struct FrontierOptions {
    double lambda_max = 10.0;
    double tolerance = 1e-5;
    std::size_t scan_steps = 200;  // coarse lambda2 scan before bisection
    unsigned jobs = 1;
};

std::vector<FrontierPoint> rbdo_frontier(const Scenario& scenario, double beta_target,
                                         const std::vector<double>& lambda1_grid,
                                         const FrontierOptions& options = {});

struct LocalMinimum {
    Design design;
    double total = 0.0;
    bool converged = false;
};

struct OptimizationResult {
    Design best;
    ReliabilityBreakdown breakdown;
    CostBreakdown costs;
    std::vector<LocalMinimum> local_minima;  // ascending total
    std::size_t evaluations = 0;
    bool converged = false;
    bool feasible = true;
    double max_beta_sys = 0.0;  // rbdo only
    bool degenerate = false;    // zero design returned by rbdo
    std::vector<std::string> diagnostics;
};

struct RbdoOptions {
    double lambda1_step = 0.02;
    FrontierOptions frontier{};
};

/// Minimum material cost subject to beta_sys >= beta_target. An infeasible
/// target is reported through `feasible` and `max_beta_sys`.
OptimizationResult rbdo_optimize(const Scenario& scenario, double beta_target,
                                 const RbdoOptions& options = {});

struct RoOptions {
    double grid_max = 3.0;
    std::size_t grid_points = 25;  // per axis
    std::size_t max_seeds = 32;
    double distinct = 0.05;
    unsigned jobs = 1;
};

/// Multi-start risk optimization: grid seeding plus simplex refinement.
/// Symmetric scenarios report the lambda1 <= lambda2 representative and a
/// swap-closed minima list.
OptimizationResult ro_optimize(const Scenario& scenario, const RoOptions& options = {});

}  // namespace twobar

#endif  // TWOBAR_OPTIMIZE_HPP
