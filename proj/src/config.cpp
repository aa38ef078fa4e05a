// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#include "twobar/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace twobar {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) throw ConfigError(where + ": expected an object");
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* name : allowed) known = known || key == name;
        if (!known) throw ConfigError("unknown field '" + where + (where.empty() ? "" : ".") + key + "'");
    }
}

void read_number(const json& obj, const char* key, const std::string& where, double& out) {
    auto it = obj.find(key);
    if (it == obj.end()) return;
    if (!it->is_number()) throw ConfigError(where + "." + key + ": expected a number");
    out = it->get<double>();
}

void read_material(const json& root, const char* key, Material& m) {
    auto it = root.find(key);
    if (it == root.end()) return;
    reject_unknown(*it, key, {"mean", "cov", "eta"});
    read_number(*it, "mean", key, m.mean);
    read_number(*it, "cov", key, m.cov);
    read_number(*it, "eta", key, m.eta);
}

template <class Enum>
Enum read_enum(const json& root, const char* key, Enum current,
               std::initializer_list<std::pair<const char*, Enum>> names) {
    auto it = root.find(key);
    if (it == root.end()) return current;
    if (!it->is_string()) throw ConfigError(std::string(key) + ": expected a string");
    const auto value = it->get<std::string>();
    for (const auto& [name, e] : names)
        if (value == name) return e;
    throw ConfigError(std::string(key) + ": unrecognized value '" + value + "'");
}

}  // namespace

Scenario scenario_from_json(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    reject_unknown(root, "", {"material1", "material2", "load", "rho12", "latent", "redundancy",
                              "standby_engages", "costs", "covariance_convention"});

    Scenario s = Scenario::paper_default();
    read_material(root, "material1", s.material1);
    read_material(root, "material2", s.material2);

    if (auto it = root.find("load"); it != root.end()) {
        reject_unknown(*it, "load", {"mean", "cov", "impact"});
        read_number(*it, "mean", "load", s.load.mean);
        read_number(*it, "cov", "load", s.load.cov);
        read_number(*it, "impact", "load", s.load.impact);
    }
    read_number(root, "rho12", "", s.rho12);
    if (auto it = root.find("latent"); it != root.end()) {
        reject_unknown(*it, "latent", {"pL1", "pL2"});
        read_number(*it, "pL1", "latent", s.latent.p1);
        read_number(*it, "pL2", "latent", s.latent.p2);
    }
    s.redundancy = read_enum(root, "redundancy", s.redundancy,
                             {{"active_passive", Redundancy::active_passive},
                              {"passive", Redundancy::passive}});
    if (auto it = root.find("standby_engages"); it != root.end()) {
        if (!it->is_boolean()) throw ConfigError("standby_engages: expected a boolean");
        s.standby_engages = it->get<bool>();
    }
    if (auto it = root.find("costs"); it != root.end()) {
        reject_unknown(*it, "costs", {"kSF", "kPC", "kDC"});
        read_number(*it, "kSF", "costs", s.costs.service);
        read_number(*it, "kPC", "costs", s.costs.progressive);
        read_number(*it, "kDC", "costs", s.costs.direct);
    }
    s.convention = read_enum(root, "covariance_convention", s.convention,
                             {{"as_printed", CovarianceConvention::as_printed},
                              {"standard", CovarianceConvention::standard}});
    return validate_scenario(s);
}

Scenario scenario_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return scenario_from_json(buffer.str());
}

std::string scenario_to_json(const Scenario& s) {
    const json doc = {
        {"material1", {{"mean", s.material1.mean}, {"cov", s.material1.cov}, {"eta", s.material1.eta}}},
        {"material2", {{"mean", s.material2.mean}, {"cov", s.material2.cov}, {"eta", s.material2.eta}}},
        {"load", {{"mean", s.load.mean}, {"cov", s.load.cov}, {"impact", s.load.impact}}},
        {"rho12", s.rho12},
        {"latent", {{"pL1", s.latent.p1}, {"pL2", s.latent.p2}}},
        {"redundancy", to_string(s.redundancy)},
        {"standby_engages", s.standby_engages},
        {"costs", {{"kSF", s.costs.service}, {"kPC", s.costs.progressive}, {"kDC", s.costs.direct}}},
        {"covariance_convention", to_string(s.convention)},
    };
    return doc.dump(2);
}

}  // namespace twobar
