// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TWOBAR_MODEL_HPP
#define TWOBAR_MODEL_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace twobar {

enum class Bar { first = 1, second = 2 };

inline constexpr Bar other(Bar b) noexcept {
    return b == Bar::first ? Bar::second : Bar::first;
}

enum class Redundancy { active_passive, passive };

/// How the strength cross term enters the conditional and joint variances.
/// `as_printed` uses c = 1 in c*eta*a1*a2*sigma1*sigma2*rho, `standard` the
/// bilinear expansion c = 2.
enum class CovarianceConvention { as_printed, standard };

/// Gaussian strength with a fragile/ductile post-failure factor eta.
struct Material {
    double mean = 5.0;
    double cov = 0.1;
    double eta = 0.0;

    double std_dev() const noexcept { return cov * mean; }
};

/// Two i.i.d. Gaussian load pulses plus the impact factor applied on
/// sudden redistribution.
struct LoadModel {
    double mean = 10.0;
    double cov = 0.3;
    double impact = 1.0;

    double std_dev() const noexcept { return cov * mean; }
};

/// Connection (latent) failure probabilities, independent between bars.
struct LatentFailure {
    double p1 = 1e-3;
    double p2 = 1e-3;

    /// -Phi^-1 of the larger of the two probabilities.
    double beta_latent() const;
};

struct CostMultipliers {
    double service = 2.0;       // k_SF
    double progressive = 20.0;  // k_PC
    double direct = 100.0;      // k_DC
};

struct Scenario {
    Material material1{};
    Material material2{};
    LoadModel load{};
    double rho12 = 0.0;
    LatentFailure latent{};
    Redundancy redundancy = Redundancy::active_passive;
    bool standby_engages = true;  // passive only
    CostMultipliers costs{};
    CovarianceConvention convention = CovarianceConvention::as_printed;

    const Material& material(Bar b) const noexcept {
        return b == Bar::first ? material1 : material2;
    }
    double latent_probability(Bar b) const noexcept {
        return b == Bar::first ? latent.p1 : latent.p2;
    }
    bool passive() const noexcept { return redundancy == Redundancy::passive; }

    /// Same-material active-passive system with equal latent probabilities:
    /// every quantity is invariant under swapping the bars.
    bool symmetric() const noexcept;

    /// mu1 = mu2 = 5, delta = 0.1, muP = 10, deltaP = 0.3, pL = 1e-3,
    /// fragile, f = 1, rho = 0, kSF/kPC/kDC = 2/20/100.
    static Scenario paper_default();
};

/// Partial load factors. For passive systems lambda1 is the active member
/// and lambda2 the standby.
struct Design {
    double lambda1 = 1.0;
    double lambda2 = 1.0;

    double lambda(Bar b) const noexcept { return b == Bar::first ? lambda1 : lambda2; }
    friend bool operator==(const Design&, const Design&) = default;
};

/// Thrown by validate_scenario; carries one message per violated invariant.
class InvalidScenario : public std::invalid_argument {
public:
    explicit InvalidScenario(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// Cross-section area from the independent sizing rule a = lambda*muP/mu.
/// The passive standby is sized for the amplified load, a = lambda*f*muP/mu2.
/// Throws std::domain_error for negative lambda.
double member_area(double lambda, Bar bar, const Scenario& scenario);

/// Same rule with an explicit impact factor for the passive standby
/// (the "f = 1" re-sizing used by the unit-impact conditional indexes).
double member_area(double lambda, Bar bar, const Scenario& scenario, double impact);

/// Area under conventional proportional sharing, a = lambdaE*muP/(2*mu).
double usual_design_area(double lambda_e, Bar bar, const Scenario& scenario);

/// Load carried by bar 1 for equal-stiffness bars, N1 = P*a1/(a1 + a2).
/// Throws std::domain_error when both areas are zero or an area is negative.
double load_fraction(double a1, double a2, double load);

/// Every violated invariant of `scenario`, empty when valid.
std::vector<std::string> scenario_violations(const Scenario& scenario);

/// Returns `raw` unchanged when valid; throws InvalidScenario otherwise.
Scenario validate_scenario(const Scenario& raw);

const char* to_string(Redundancy r) noexcept;
const char* to_string(CovarianceConvention c) noexcept;

}  // namespace twobar

#endif  // TWOBAR_MODEL_HPP
