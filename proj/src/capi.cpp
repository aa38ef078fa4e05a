// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#include "twobar/twobar.h"

#include <exception>
#include <new>
#include <string>

#include "twobar/config.hpp"
#include "twobar/cost.hpp"
#include "twobar/harness.hpp"
#include "twobar/reliability.hpp"

struct tb_scenario {
    twobar::Scenario value;
};

struct tb_text {
    std::string data;
    std::string messages;
};

namespace {

thread_local std::string last_error;

tb_status fail(tb_status status, const char* what) {
    last_error = what;
    return status;
}

// Maps exceptions from the core onto status codes.
template <class F>
tb_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const std::bad_alloc&) {
        return fail(TB_INTERNAL_ERROR, "out of memory");
    } catch (const twobar::ConfigError& e) {
        return fail(TB_INPUT_ERROR, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(TB_INPUT_ERROR, e.what());
    } catch (const std::domain_error& e) {
        return fail(TB_INPUT_ERROR, e.what());
    } catch (const std::out_of_range& e) {
        return fail(TB_INPUT_ERROR, e.what());
    } catch (const std::exception& e) {
        return fail(TB_INTERNAL_ERROR, e.what());
    } catch (...) {
        return fail(TB_INTERNAL_ERROR, "unknown error");
    }
}

tb_status emit(twobar::HarnessOutput&& r, tb_text** out) {
    auto* t = new tb_text{std::move(r.csv), {}};
    for (const auto& m : r.messages) t->messages += m + '\n';
    *out = t;
    return r.failed ? TB_TOLERANCE_FAILURE : TB_OK;
}

bool missing(const void* p) { return p == nullptr; }

}  // namespace

extern "C" {

const char* tb_version(void) { return "0.1.0"; }

const char* tb_last_error(void) { return last_error.c_str(); }

tb_status tb_scenario_default(tb_scenario** out) {
    if (missing(out)) return fail(TB_INPUT_ERROR, "null output pointer");
    return guarded([&] {
        *out = new tb_scenario{twobar::Scenario::paper_default()};
        return TB_OK;
    });
}

tb_status tb_scenario_from_json(const char* json, tb_scenario** out) {
    if (missing(json) || missing(out)) return fail(TB_INPUT_ERROR, "null argument");
    return guarded([&] {
        *out = new tb_scenario{twobar::scenario_from_json(json)};
        return TB_OK;
    });
}

tb_status tb_scenario_from_file(const char* path, tb_scenario** out) {
    if (missing(path) || missing(out)) return fail(TB_INPUT_ERROR, "null argument");
    return guarded([&] {
        *out = new tb_scenario{twobar::scenario_from_file(path)};
        return TB_OK;
    });
}

tb_status tb_scenario_to_json(const tb_scenario* scenario, tb_text** out) {
    if (missing(scenario) || missing(out)) return fail(TB_INPUT_ERROR, "null argument");
    return guarded([&] {
        *out = new tb_text{twobar::scenario_to_json(scenario->value), {}};
        return TB_OK;
    });
}

void tb_scenario_free(tb_scenario* scenario) { delete scenario; }

tb_status tb_evaluate(const tb_scenario* scenario, double lambda1, double lambda2, tb_evaluation* out) {
    if (missing(scenario) || missing(out)) return fail(TB_INPUT_ERROR, "null argument");
    return guarded([&] {
        if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0)) return fail(TB_INPUT_ERROR, "load factors must be >= 0");
        const twobar::Design d{lambda1, lambda2};
        const auto r = twobar::system_failure_probability(d, scenario->value);
        const auto c = twobar::risk_objective(d, scenario->value, r);
        *out = {r.a1,         r.a2,       r.beta1,      r.beta2,    r.beta_2g1.base,
                r.beta_1g2.base, r.beta_joint, r.p_sys, r.beta_sys, c.material,
                c.sf,         c.pc,       c.dc,         c.total};
        return TB_OK;
    });
}

tb_status tb_ro(const tb_scenario* scenario, unsigned jobs, tb_text** out) {
    if (missing(scenario) || missing(out)) return fail(TB_INPUT_ERROR, "null argument");
    return guarded([&] { return emit(twobar::run_ro(scenario->value, jobs), out); });
}

tb_status tb_rbdo(const tb_scenario* scenario, const double* beta_targets, size_t count, unsigned jobs,
                  tb_text** out) {
    if (missing(scenario) || missing(out) || (count > 0 && missing(beta_targets)))
        return fail(TB_INPUT_ERROR, "null argument");
    return guarded([&] {
        const std::vector<double> targets(beta_targets, beta_targets + count);
        return emit(twobar::run_rbdo(scenario->value, targets, jobs), out);
    });
}

tb_status tb_rbdo_frontier(const tb_scenario* scenario, double beta_target, double lambda1_min,
                           double lambda1_max, double lambda1_step, unsigned jobs, tb_text** out) {
    if (missing(scenario) || missing(out)) return fail(TB_INPUT_ERROR, "null argument");
    return guarded([&] {
        return emit(twobar::run_frontier(scenario->value, beta_target, lambda1_min, lambda1_max, lambda1_step, jobs),
                    out);
    });
}

tb_status tb_reproduce(int table_id, unsigned jobs, tb_text** out) {
    if (missing(out)) return fail(TB_INPUT_ERROR, "null output pointer");
    return guarded([&] { return emit(twobar::run_reproduce(table_id, jobs), out); });
}

tb_status tb_sweep(const char* spec_json, unsigned jobs, tb_text** out) {
    if (missing(spec_json) || missing(out)) return fail(TB_INPUT_ERROR, "null argument");
    return guarded([&] { return emit(twobar::run_sweep(spec_json, jobs), out); });
}

tb_status tb_contour(const tb_scenario* scenario, double lambda1_min, double lambda1_max, double lambda1_step,
                     double lambda2_min, double lambda2_max, double lambda2_step, const char* quantity,
                     unsigned jobs, tb_text** out) {
    if (missing(scenario) || missing(quantity) || missing(out)) return fail(TB_INPUT_ERROR, "null argument");
    return guarded([&] {
        twobar::GridSpec g;
        g.lambda1_min = lambda1_min;
        g.lambda1_max = lambda1_max;
        g.lambda1_step = lambda1_step;
        g.lambda2_min = lambda2_min;
        g.lambda2_max = lambda2_max;
        g.lambda2_step = lambda2_step;
        g.quantity = quantity;
        return emit(twobar::run_contour(scenario->value, g, jobs), out);
    });
}

tb_status tb_validate(const tb_scenario* scenario, double lambda1, double lambda2, uint64_t n, uint64_t seed,
                      unsigned jobs, tb_text** out) {
    if (missing(scenario) || missing(out)) return fail(TB_INPUT_ERROR, "null argument");
    return guarded([&] {
        return emit(twobar::run_validate(scenario->value, {lambda1, lambda2}, n, seed, jobs), out);
    });
}

const char* tb_text_data(const tb_text* text) { return text ? text->data.c_str() : ""; }

size_t tb_text_size(const tb_text* text) { return text ? text->data.size() : 0; }

const char* tb_text_messages(const tb_text* text) { return text ? text->messages.c_str() : ""; }

void tb_text_free(tb_text* text) { delete text; }

}  // extern "C"
