// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TWOBAR_CONFIG_HPP
#define TWOBAR_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "twobar/model.hpp"

namespace twobar {

/// Malformed configuration text (syntax, wrong types, unknown fields).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses a scenario document:
///
///   { "material1": {"mean", "cov", "eta"}, "material2": {...},
///     "load": {"mean", "cov", "impact"}, "rho12",
///     "latent": {"pL1", "pL2"}, "redundancy": "active_passive"|"passive",
///     "standby_engages", "costs": {"kSF", "kPC", "kDC"},
///     "covariance_convention": "as_printed"|"standard" }
///
/// Absent fields keep the paper defaults. Throws ConfigError on malformed
/// input and InvalidScenario when the result breaks a model invariant.
Scenario scenario_from_json(std::string_view text);

/// Reads and parses a scenario file. Throws ConfigError if unreadable.
Scenario scenario_from_file(const std::string& path);

/// Canonical JSON rendering accepted back by scenario_from_json.
std::string scenario_to_json(const Scenario& scenario);

}  // namespace twobar

#endif  // TWOBAR_CONFIG_HPP
