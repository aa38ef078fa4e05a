// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TWOBAR_RELIABILITY_HPP
#define TWOBAR_RELIABILITY_HPP

#include <optional>
#include <vector>

#include "twobar/model.hpp"

namespace twobar {

/// Conditional index of the survivor after a member loss, in the four
/// variants the event trees use.
struct ConditionalIndexes {
    double base = 0.0;                 // scenario eta, impact f_i
    double unit_impact = 0.0;          // scenario eta, f = 1
    double fragile = 0.0;              // eta = 0, impact f_i
    double fragile_unit_impact = 0.0;  // eta = 0, f = 1
};

/// One weighted path of the system failure sum, labelled by its event-tree
/// letter. `exact` marks single-event connection paths.
struct PathTerm {
    const char* label = "";
    double probability = 0.0;
    bool exact = false;
};

struct ReliabilityBreakdown {
    double a1 = 0.0;
    double a2 = 0.0;

    double beta1 = 0.0;
    double beta2 = 0.0;
    ConditionalIndexes beta_2g1;
    ConditionalIndexes beta_1g2;
    double beta_joint = 0.0;

    double p_f1 = 0.0;     // Phi(-beta1)
    double p_f2 = 0.0;     // Phi(-beta2)
    double p_joint = 0.0;  // Phi(-beta_joint), 0 for a standby that does not engage early
    double p_f1_only = 0.0;
    double p_f2_only = 0.0;
    double p_union = 0.0;

    double p_sys = 0.0;
    double beta_sys = 0.0;

    std::vector<PathTerm> paths;
    double exact_path_mass = 0.0;
};

/// Primary-failure index of `bar`. Active-passive bars share the load; the
/// passive active member carries it alone, and the passive standby index
/// is that of the standby acting alone.
double beta_primary(const Design& design, const Scenario& scenario, Bar bar);

/// Index of the survivor after `failed` is lost. `eta` and `impact` override
/// the scenario values; a passive standby is re-sized with the overriding
/// impact factor.
double beta_conditional(const Design& design, const Scenario& scenario, Bar failed,
                        std::optional<double> eta = std::nullopt,
                        std::optional<double> impact = std::nullopt);

/// Joint failure index; the load is amplified by f_i when `include_impact`.
double beta_joint(const Design& design, const Scenario& scenario, bool include_impact);

/// max(0, Phi(-beta_bar) - Phi(-beta_joint)).
double p_only_first(const Design& design, const Scenario& scenario, Bar bar);

/// Phi(-beta1) + Phi(-beta2) - Phi(-beta_joint), clamped to [0, 1].
double p_union(const Design& design, const Scenario& scenario);

/// Every index, path probability and the system failure probability.
ReliabilityBreakdown system_failure_probability(const Design& design, const Scenario& scenario);

/// Sum of nonnegative terms, smallest first.
double ordered_sum(std::vector<double> terms);

}  // namespace twobar

#endif  // TWOBAR_RELIABILITY_HPP
