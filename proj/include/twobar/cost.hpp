// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TWOBAR_COST_HPP
#define TWOBAR_COST_HPP

#include "twobar/model.hpp"
#include "twobar/reliability.hpp"

namespace twobar {

/// Expected life-cycle cost normalized by the reference structure (lambda = 1).
struct CostBreakdown {
    double material = 0.0;
    double sf = 0.0;  // service failure
    double pc = 0.0;  // progressive collapse
    double dc = 0.0;  // direct collapse
    double total = 0.0;
};

/// Material volume relative to the lambda = 1 design. The passive standby
/// counts with its impact-sized area against a unit-impact reference.
double material_cost(const Design& design, const Scenario& scenario);

/// Material plus k-weighted failure consequences.
CostBreakdown risk_objective(const Design& design, const Scenario& scenario);

/// Same, reusing an already evaluated breakdown of `design`.
CostBreakdown risk_objective(const Design& design, const Scenario& scenario,
                             const ReliabilityBreakdown& reliability);

}  // namespace twobar

#endif  // TWOBAR_COST_HPP
