// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TWOBAR_HARNESS_HPP
#define TWOBAR_HARNESS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twobar/model.hpp"

namespace twobar {

/// Bad harness input (spec documents, grids, table ids).
class HarnessInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// CSV text plus diagnostics. `failed` is set when a tolerance check failed.
struct HarnessOutput {
    std::string csv;
    std::vector<std::string> messages;
    bool failed = false;
};

/// Re-optimizes every column of a paper table and compares each quantity
/// with the printed value. Sets `failed` when a cell is out of tolerance.
HarnessOutput run_reproduce(int table_id, unsigned jobs = 1);

/// Parametric sweep. Spec document:
///
///   { "base": <scenario>, "axes": { "pL", "impact", "rho12", "eta",
///     "mean_ratio", "cov_ratio" : [values] }, "mode": "ro" | "rbdo",
///     "beta_targets": [values] }
///
/// Axes apply in that order; rows are lexicographic with the first axis
/// slowest. mean_ratio r = mu2/mu1 and cov_ratio c = cov1/cov2 keep the base
/// sums mu1 + mu2 and cov1 + cov2. Every scenario is validated before any
/// optimization runs.
HarnessOutput run_sweep(std::string_view spec_json, unsigned jobs = 1);

struct GridSpec {
    double lambda1_min = 0.0, lambda1_max = 3.0, lambda1_step = 0.05;
    double lambda2_min = 0.0, lambda2_max = 3.0, lambda2_step = 0.05;
    std::string quantity = "ro_total";  // or "beta_sys"
};

inline constexpr std::uint64_t max_contour_cells = 10'000'000;

/// (lambda1, lambda2, value) rows, lambda1 outer. Rejects more than
/// max_contour_cells cells.
HarnessOutput run_contour(const Scenario& scenario, const GridSpec& grid, unsigned jobs = 1);

/// Risk-optimal design with every distinct local minimum.
HarnessOutput run_ro(const Scenario& scenario, unsigned jobs = 1);

/// RBDO optimum for each target.
HarnessOutput run_rbdo(const Scenario& scenario, const std::vector<double>& beta_targets,
                       unsigned jobs = 1);

/// RBDO frontier over lambda1 = min, min + step, ..., max.
HarnessOutput run_frontier(const Scenario& scenario, double beta_target, double lambda1_min,
                           double lambda1_max, double lambda1_step, unsigned jobs = 1);

/// Closed forms against the Monte Carlo oracle. Statuses: PASS, FAIL,
/// KNOWN-GAP (registered before sampling) and NOTE (informational).
HarnessOutput run_validate(const Scenario& scenario, const Design& design, std::uint64_t n,
                           std::uint64_t seed, unsigned jobs = 1);

/// Shortest round-trip decimal rendering with '.' separator.
std::string format_number(double value);

}  // namespace twobar

#endif  // TWOBAR_HARNESS_HPP
