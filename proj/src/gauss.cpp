// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#include "twobar/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twobar::gauss {
namespace {

constexpr double inv_sqrt2 = 0.70710678118654752440;
constexpr double sqrt_2pi = 2.50662827463100050242;

// Acklam's rational approximation, relative error ~1.15e-9 before refinement.
double initial_quantile(double p) {
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// Lower-half quantile, 0 < p <= 0.5. Halley steps against cdf.
double lower_quantile(double p) {
    double x = initial_quantile(p);
    for (int iter = 0; iter < 3; ++iter) {
        const double err = cdf(x) - p;
        if (err == 0.0) break;
        // err / pdf(x), written so the tail does not underflow before dividing.
        const double u = err * sqrt_2pi * std::exp(0.5 * x * x);
        if (!std::isfinite(u)) break;
        const double step = u / (1.0 + 0.5 * x * u);
        x -= step;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

}  // namespace

double cdf(double x) noexcept {
    if (std::isnan(x)) return x;
    return 0.5 * std::erfc(-x * inv_sqrt2);
}

double quantile(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("gauss::quantile: probability outside [0, 1]");
    }
    if (p == 0.0) return -unbounded;
    if (p == 1.0) return unbounded;
    if (p == 0.5) return 0.0;
    if (p < 0.5) return lower_quantile(p);
    // 1 - p is exact for p >= 0.5.
    return -lower_quantile(1.0 - p);
}

}  // namespace twobar::gauss
