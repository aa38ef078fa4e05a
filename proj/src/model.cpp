// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#include "twobar/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "twobar/gauss.hpp"

namespace twobar {
namespace {

std::string join(const std::vector<std::string>& items) {
    std::string out = "invalid scenario:";
    for (const auto& item : items) {
        out += "\n  - ";
        out += item;
    }
    return out;
}

template <class T>
std::string fmt(const char* field, T value, const char* bound) {
    std::ostringstream os;
    os.precision(17);
    os << field << " = " << value << " violates " << bound;
    return os.str();
}

void check_material(const Material& m, const char* name, std::vector<std::string>& out) {
    const std::string prefix = name;
    if (!(m.mean > 0.0)) out.push_back(fmt((prefix + ".mean").c_str(), m.mean, "mean > 0"));
    if (!(m.cov > 0.0)) out.push_back(fmt((prefix + ".cov").c_str(), m.cov, "cov > 0"));
    if (!(m.eta >= 0.0 && m.eta <= 1.0))
        out.push_back(fmt((prefix + ".eta").c_str(), m.eta, "0 <= eta <= 1"));
}

}  // namespace

double LatentFailure::beta_latent() const {
    return gauss::pf_to_beta(std::max(p1, p2));
}

bool Scenario::symmetric() const noexcept {
    return redundancy == Redundancy::active_passive && material1.mean == material2.mean &&
           material1.cov == material2.cov && material1.eta == material2.eta &&
           latent.p1 == latent.p2;
}

Scenario Scenario::paper_default() { return Scenario{}; }

InvalidScenario::InvalidScenario(std::vector<std::string> violations)
    : std::invalid_argument(join(violations)), violations_(std::move(violations)) {}

double member_area(double lambda, Bar bar, const Scenario& scenario) {
    return member_area(lambda, bar, scenario, scenario.load.impact);
}

double member_area(double lambda, Bar bar, const Scenario& scenario, double impact) {
    if (!(lambda >= 0.0)) throw std::domain_error("member_area: negative partial load factor");
    const double base = lambda * scenario.load.mean / scenario.material(bar).mean;
    if (scenario.passive() && bar == Bar::second) return base * impact;
    return base;
}

double usual_design_area(double lambda_e, Bar bar, const Scenario& scenario) {
    if (!(lambda_e >= 0.0)) throw std::domain_error("usual_design_area: negative load factor");
    return lambda_e * scenario.load.mean / (2.0 * scenario.material(bar).mean);
}

double load_fraction(double a1, double a2, double load) {
    if (!(a1 >= 0.0 && a2 >= 0.0)) throw std::domain_error("load_fraction: negative area");
    const double total = a1 + a2;
    if (!(total > 0.0)) throw std::domain_error("load_fraction: both areas are zero");
    return load * (a1 / total);
}

std::vector<std::string> scenario_violations(const Scenario& s) {
    std::vector<std::string> out;
    check_material(s.material1, "material1", out);
    check_material(s.material2, "material2", out);
    if (s.material1.eta != s.material2.eta)
        out.push_back(fmt("material2.eta", s.material2.eta,
                          "equal post-failure factor for both bars (mixed assemblies excluded)"));
    if (!(s.load.mean > 0.0)) out.push_back(fmt("load.mean", s.load.mean, "mean > 0"));
    if (!(s.load.cov > 0.0))
        out.push_back(fmt("load.cov", s.load.cov, "cov > 0 (sigmaP > 0 required)"));
    if (!(s.load.impact >= 1.0)) out.push_back(fmt("load.impact", s.load.impact, "impact >= 1"));
    if (!(s.rho12 >= 0.0 && s.rho12 < 1.0))
        out.push_back(fmt("rho12", s.rho12, "ρ12 ∈ [0,1)"));
    if (!(s.latent.p1 >= 0.0 && s.latent.p1 <= 1.0))
        out.push_back(fmt("latent.pL1", s.latent.p1, "0 <= pL1 <= 1"));
    if (!(s.latent.p2 >= 0.0 && s.latent.p2 <= 1.0))
        out.push_back(fmt("latent.pL2", s.latent.p2, "0 <= pL2 <= 1"));
    const auto& k = s.costs;
    if (!(k.service >= 1.0)) out.push_back(fmt("costs.kSF", k.service, "kSF >= 1"));
    if (!(k.progressive > k.service))
        out.push_back(fmt("costs.kPC", k.progressive, "kPC > kSF"));
    if (!(k.direct > k.progressive))
        out.push_back(fmt("costs.kDC", k.direct, "kDC > kPC"));
    return out;
}

Scenario validate_scenario(const Scenario& raw) {
    auto violations = scenario_violations(raw);
    if (!violations.empty()) throw InvalidScenario(std::move(violations));
    return raw;
}

const char* to_string(Redundancy r) noexcept {
    return r == Redundancy::passive ? "passive" : "active_passive";
}

const char* to_string(CovarianceConvention c) noexcept {
    return c == CovarianceConvention::standard ? "standard" : "as_printed";
}

}  // namespace twobar
