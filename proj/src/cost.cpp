// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#include "twobar/cost.hpp"

#include "twobar/gauss.hpp"

namespace twobar {
namespace {

using gauss::beta_to_pf;
using gauss::cdf;

}  // namespace

double material_cost(const Design& d, const Scenario& s) {
    const double m1 = s.material1.mean;
    const double m2 = s.material2.mean;
    const double used = member_area(d.lambda1, Bar::first, s) * m1 +
                        member_area(d.lambda2, Bar::second, s) * m2;
    const double reference = member_area(1.0, Bar::first, s, 1.0) * m1 +
                             member_area(1.0, Bar::second, s, 1.0) * m2;
    return used / reference;
}

CostBreakdown risk_objective(const Design& d, const Scenario& s) {
    return risk_objective(d, s, system_failure_probability(d, s));
}

CostBreakdown risk_objective(const Design& d, const Scenario& s, const ReliabilityBreakdown& r) {
    const double p1 = s.latent.p1;
    const double p2 = s.latent.p2;
    const double q = (1.0 - p1) * (1.0 - p2);
    const double c1_only = p1 * (1.0 - p2);
    const double c2_only = (1.0 - p1) * p2;
    const auto& b21 = r.beta_2g1;
    const auto& b12 = r.beta_1g2;
    const auto& k = s.costs;

    CostBreakdown c;
    c.material = material_cost(d, s);
    // Replacement factor a_i(lambda_i)/a_i(1).
    const double rep1 = member_area(d.lambda1, Bar::first, s) / member_area(1.0, Bar::first, s);
    const double rep2 = member_area(d.lambda2, Bar::second, s) / member_area(1.0, Bar::second, s);

    if (!s.passive()) {
        const double survive = 1.0 - r.p_union;
        const double intact = 1.0 + survive;  // first load plus survival to the second
        // A member loss is always repaired; a survivor that holds adds a second repair path.
        c.sf = k.service * ordered_sum({rep1 * q * r.p_f1_only, rep1 * q * r.p_f1_only * survive * cdf(b21.base),
                                        rep2 * q * r.p_f2_only, rep2 * q * r.p_f2_only * survive * cdf(b12.base)});
        c.pc = k.progressive *
               ordered_sum({q * r.p_f1_only * beta_to_pf(b21.base),
                            q * r.p_f2_only * beta_to_pf(b12.base),
                            c1_only * cdf(b21.fragile) * beta_to_pf(b21.fragile_unit_impact),
                            c2_only * cdf(b12.fragile) * beta_to_pf(b12.fragile_unit_impact)});
        c.dc = k.direct * ordered_sum({q * r.p_joint * intact, c1_only * beta_to_pf(b21.fragile),
                                       c2_only * beta_to_pf(b12.fragile), p1 * p2});
    } else {
        c.sf = k.service *
               ordered_sum({rep1 * (1.0 - p1) * cdf(r.beta1) * r.p_f1_only,
                            rep1 * q * r.p_f1_only * cdf(b21.base) * cdf(b21.unit_impact)});
        c.pc = k.progressive *
               ordered_sum({q * r.p_f1_only * cdf(b21.base) * beta_to_pf(b21.unit_impact),
                            c1_only * cdf(b21.fragile) * beta_to_pf(b21.fragile_unit_impact)});
        // The last term is the standby connection failing on mobilization.
        c.dc = k.direct * ordered_sum({q * cdf(r.beta1) * r.p_joint,
                                       q * r.p_f1_only * beta_to_pf(b21.base),
                                       c2_only * r.p_f1_only, q * r.p_joint,
                                       c1_only * beta_to_pf(b21.fragile), p1 * p2, q * p2});
    }
    c.total = c.material + c.sf + c.pc + c.dc;
    return c;
}

}  // namespace twobar
