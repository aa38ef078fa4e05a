// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TWOBAR_GAUSS_HPP
#define TWOBAR_GAUSS_HPP

#include <limits>

namespace twobar::gauss {

/// Saturating sentinel for an unbounded reliability index.
inline constexpr double unbounded = std::numeric_limits<double>::infinity();

/// Standard normal CDF, evaluated through erfc so that both tails keep full
/// relative precision. Total: +/-unbounded map to 1 and 0.
double cdf(double x) noexcept;

/// Inverse of cdf. p == 0 and p == 1 give -/+unbounded.
/// Throws std::domain_error for p outside [0, 1] or NaN.
double quantile(double p);

/// Failure probability of a reliability index, Phi(-beta).
inline double beta_to_pf(double beta) noexcept { return cdf(-beta); }

/// Reliability index of a failure probability, -Phi^-1(p).
inline double pf_to_beta(double p) { return -quantile(p); }

}  // namespace twobar::gauss

#endif  // TWOBAR_GAUSS_HPP
