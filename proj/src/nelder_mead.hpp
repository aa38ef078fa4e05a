// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TWOBAR_NELDER_MEAD_HPP
#define TWOBAR_NELDER_MEAD_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <limits>

namespace twobar::detail {

using Point = std::array<double, 2>;

struct SimplexOptions {
    double initial_step = 0.05;
    double tolerance = 1e-6;  // simplex diameter
    std::size_t max_evaluations = 20000;
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();
};

struct SimplexResult {
    Point x{};
    double value = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

/// Two-dimensional Nelder-Mead minimization over the box [lower, upper]^2.
/// Trial points are projected onto the box. After convergence the simplex
/// is rebuilt around the best vertex until a restart brings no improvement.
SimplexResult nelder_mead(const std::function<double(const Point&)>& objective, Point start,
                          const SimplexOptions& options = {});

}  // namespace twobar::detail

#endif  // TWOBAR_NELDER_MEAD_HPP
