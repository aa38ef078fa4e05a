// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#include "twobar/reliability.hpp"

#include <algorithm>
#include <cmath>

#include "twobar/gauss.hpp"

namespace twobar {
namespace {

using gauss::beta_to_pf;
using gauss::cdf;

double cross_coefficient(const Scenario& s) {
    return s.convention == CovarianceConvention::standard ? 2.0 : 1.0;
}

double area(const Design& d, Bar bar, const Scenario& s, double impact) {
    return member_area(d.lambda(bar), bar, s, impact);
}

// Survivor j after losing i: (aj muj + eta ai mui - f muP) / sd.
double conditional_index(double ai, const Material& mi, double aj, const Material& mj,
                         double eta, double f, const Scenario& s) {
    const double num = aj * mj.mean + eta * ai * mi.mean - f * s.load.mean;
    const double ui = eta * ai * mi.std_dev();
    const double uj = aj * mj.std_dev();
    const double fp = f * s.load.std_dev();
    const double var = uj * uj + ui * ui + cross_coefficient(s) * s.rho12 * (ui * uj) + fp * fp;
    return num / std::sqrt(var);
}

double primary_index(double a, const Material& m, const LoadModel& load) {
    const double u = a * m.std_dev();
    const double sp = load.std_dev();
    return (a * m.mean - load.mean) / std::sqrt(u * u + sp * sp);
}

double joint_index(double a1, double a2, double f, const Scenario& s) {
    const double u1 = a1 * s.material1.std_dev();
    const double u2 = a2 * s.material2.std_dev();
    const double fp = f * s.load.std_dev();
    const double num = a1 * s.material1.mean + a2 * s.material2.mean - f * s.load.mean;
    const double var = u1 * u1 + u2 * u2 + cross_coefficient(s) * s.rho12 * (u1 * u2) + fp * fp;
    return num / std::sqrt(var);
}

ConditionalIndexes conditional_family(const Design& d, const Scenario& s, Bar failed) {
    return {beta_conditional(d, s, failed),
            beta_conditional(d, s, failed, std::nullopt, 1.0),
            beta_conditional(d, s, failed, 0.0),
            beta_conditional(d, s, failed, 0.0, 1.0)};
}

}  // namespace

double ordered_sum(std::vector<double> terms) {
    std::sort(terms.begin(), terms.end());
    double total = 0.0;
    for (double t : terms) total += t;
    return total;
}

double beta_primary(const Design& d, const Scenario& s, Bar bar) {
    const double a1 = area(d, Bar::first, s, s.load.impact);
    const double a2 = area(d, Bar::second, s, s.load.impact);
    if (s.passive()) return primary_index(bar == Bar::first ? a1 : a2, s.material(bar), s.load);
    return primary_index(a1 + a2, s.material(bar), s.load);
}

double beta_conditional(const Design& d, const Scenario& s, Bar failed, std::optional<double> eta,
                        std::optional<double> impact) {
    const double f = impact.value_or(s.load.impact);
    const Bar survivor = other(failed);
    return conditional_index(area(d, failed, s, f), s.material(failed), area(d, survivor, s, f),
                             s.material(survivor), eta.value_or(s.material(failed).eta), f, s);
}

double beta_joint(const Design& d, const Scenario& s, bool include_impact) {
    const double a1 = area(d, Bar::first, s, s.load.impact);
    const double a2 = area(d, Bar::second, s, s.load.impact);
    return joint_index(a1, a2, include_impact ? s.load.impact : 1.0, s);
}

double p_only_first(const Design& d, const Scenario& s, Bar bar) {
    const auto r = system_failure_probability(d, s);
    return bar == Bar::first ? r.p_f1_only : r.p_f2_only;
}

double p_union(const Design& d, const Scenario& s) {
    return system_failure_probability(d, s).p_union;
}

ReliabilityBreakdown system_failure_probability(const Design& d, const Scenario& s) {
    ReliabilityBreakdown r;
    r.a1 = member_area(d.lambda1, Bar::first, s);
    r.a2 = member_area(d.lambda2, Bar::second, s);
    r.beta1 = beta_primary(d, s, Bar::first);
    r.beta2 = beta_primary(d, s, Bar::second);
    r.beta_2g1 = conditional_family(d, s, Bar::first);
    r.beta_1g2 = conditional_family(d, s, Bar::second);

    const bool joint_possible = !s.passive() || s.standby_engages;
    r.beta_joint = joint_possible ? beta_joint(d, s, s.passive()) : gauss::unbounded;

    r.p_f1 = beta_to_pf(r.beta1);
    r.p_f2 = beta_to_pf(r.beta2);
    r.p_joint = beta_to_pf(r.beta_joint);
    r.p_f1_only = std::max(0.0, r.p_f1 - r.p_joint);
    r.p_f2_only = std::max(0.0, r.p_f2 - r.p_joint);
    r.p_union = std::clamp(r.p_f1 + r.p_f2 - r.p_joint, 0.0, 1.0);

    const double p1 = s.latent.p1;
    const double p2 = s.latent.p2;
    const double q = (1.0 - p1) * (1.0 - p2);
    const double c1_only = p1 * (1.0 - p2);
    const double c2_only = (1.0 - p1) * p2;
    const auto& b21 = r.beta_2g1;
    const auto& b12 = r.beta_1g2;

    if (!s.passive()) {
        r.paths = {
            {"f", q * r.p_f1_only * beta_to_pf(b21.base), false},
            {"g", q * r.p_f2_only * beta_to_pf(b12.base), false},
            {"k", q * r.p_joint, false},
            {"h", c1_only * cdf(b21.fragile) * beta_to_pf(b21.fragile_unit_impact), false},
            {"l", c1_only * beta_to_pf(b21.fragile), true},
            {"i", c2_only * cdf(b12.fragile) * beta_to_pf(b12.fragile_unit_impact), false},
            {"m", c2_only * beta_to_pf(b12.fragile), true},
            {"n", p1 * p2, true},
        };
    } else {
        r.paths = {
            {"d", q * r.p_f1_only * beta_to_pf(b21.base) * beta_to_pf(b21.unit_impact), false},
            {"e", c1_only * cdf(b21.fragile) * beta_to_pf(b21.fragile_unit_impact), false},
            {"f", q * cdf(r.beta1) * r.p_joint, false},
            {"g", q * r.p_f1_only * beta_to_pf(b21.base), false},
            {"h", c2_only * r.p_f1_only, false},
            {"i", q * r.p_joint, false},
            {"j", c1_only * beta_to_pf(b21.fragile), true},
            {"k", p1 * p2, true},
        };
    }

    std::vector<double> all;
    std::vector<double> exact;
    for (const auto& path : r.paths) {
        all.push_back(path.probability);
        if (path.exact) exact.push_back(path.probability);
    }
    r.p_sys = std::min(1.0, ordered_sum(std::move(all)));
    r.exact_path_mass = ordered_sum(std::move(exact));
    r.beta_sys = gauss::pf_to_beta(r.p_sys);
    return r;
}

}  // namespace twobar
