// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TWOBAR_ORACLE_HPP
#define TWOBAR_ORACLE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twobar/model.hpp"

namespace twobar {

/// Worst consequence reached by one replicate.
enum class Outcome { none = 0, service = 1, progressive = 2, direct = 3 };

const char* to_string(Outcome o) noexcept;

struct Estimate {
    double value = 0.0;
    double se = 0.0;
};

struct PathEstimate {
    std::string label;
    Outcome outcome = Outcome::none;
    std::uint64_t count = 0;
    Estimate probability;
};

/// Monte Carlo estimates of the two-load event tree.
///
/// Path labels follow the event-tree letters. Active-passive: n, l, h, m, i
/// (connection branches), j/k (joint failure on load 1/2), f/g (member loss
/// then survivor failure on load 1), b/c (member loss, survivor holds).
/// Labels with a trailing '+' continue a load-1 member loss into load 2;
/// labels ending in '2' start with a member loss on load 2 (d/e are the
/// load-2 service failures). Passive: k, j, e (active connection lost),
/// i/f (joint failure on load 1/2), h/g (standby connection or standby
/// lost after mobilization on load 1), d (standby lost on load 2), c and b
/// (service failures on load 1/2), h2/g2 as h/g after mobilization on load 2.
struct MCEstimate {
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::array<std::uint64_t, 4> class_counts{};  // indexed by Outcome

    Estimate p_sys;
    Estimate p_service;
    Estimate p_progressive;
    Estimate p_direct;
    double material = 0.0;
    Estimate cost;  // material plus sampled consequence cost

    // Limit states on the first load over all replicates, regardless of
    // connection outcome: primary failures, joint failure and the survivor
    // after losing bar 1 (scenario eta and impact).
    Estimate p_f1;
    Estimate p_f2;
    Estimate p_joint;
    Estimate p_g21;

    std::vector<PathEstimate> paths;

    /// Path by label; throws std::out_of_range for an unknown label.
    const PathEstimate& path(std::string_view label) const;
};

/// Simulates `n` replicates. Replicates are split into fixed chunks, each
/// with its own generator seeded from (seed, chunk index), so the estimate
/// is identical for any `jobs`. Throws std::domain_error for n = 0.
MCEstimate simulate_system(const Scenario& scenario, const Design& design, std::uint64_t n,
                           std::uint64_t seed, unsigned jobs = 1);

}  // namespace twobar

#endif  // TWOBAR_ORACLE_HPP
