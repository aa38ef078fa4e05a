// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Links only the C interface of libtwobar.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twobar/twobar.h"

namespace {

constexpr int exit_input_error = 2;

struct ScenarioDeleter {
    void operator()(tb_scenario* s) const { tb_scenario_free(s); }
};
struct TextDeleter {
    void operator()(tb_text* t) const { tb_text_free(t); }
};
using ScenarioPtr = std::unique_ptr<tb_scenario, ScenarioDeleter>;
using TextPtr = std::unique_ptr<tb_text, TextDeleter>;

struct Globals {
    std::string config;
    std::string out;
    std::uint64_t seed = 20260101;
    unsigned jobs = 1;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ScenarioPtr load_scenario(const Globals& g) {
    tb_scenario* s = nullptr;
    const tb_status st = g.config.empty() ? tb_scenario_default(&s) : tb_scenario_from_file(g.config.c_str(), &s);
    if (st != TB_OK) throw InputError(tb_last_error());
    return ScenarioPtr(s);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes the CSV and diagnostics; returns the process exit code.
int finish(tb_status st, tb_text** raw, const Globals& g) {
    TextPtr text(*raw);
    if (st != TB_OK && st != TB_TOLERANCE_FAILURE) {
        std::cerr << "twobar: " << tb_last_error() << '\n';
        return st == TB_INPUT_ERROR ? exit_input_error : 3;
    }
    std::cerr << tb_text_messages(text.get());
    if (g.out.empty()) {
        std::cout.write(tb_text_data(text.get()), static_cast<std::streamsize>(tb_text_size(text.get())));
        std::cout.flush();
    } else {
        std::ofstream f(g.out, std::ios::binary | std::ios::trunc);
        f.write(tb_text_data(text.get()), static_cast<std::streamsize>(tb_text_size(text.get())));
        if (!f) {
            std::cerr << "twobar: cannot write '" << g.out << "'\n";
            return exit_input_error;
        }
    }
    return st == TB_TOLERANCE_FAILURE ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-bar redundant system: reliability, risk optimization and reproduction harness"};
    app.set_version_flag("--version", std::string(tb_version()));
    app.require_subcommand(1);

    Globals g;
    app.add_option("--config", g.config, "Scenario JSON file")->check(CLI::ExistingFile);
    app.add_option("--out", g.out, "Write CSV here instead of stdout");
    app.add_option("--seed", g.seed, "Monte Carlo seed");
    app.add_option("--jobs", g.jobs, "Worker threads (0 = all cores)");

    int table = 0;
    auto* reproduce = app.add_subcommand("reproduce", "Re-optimize a paper table and compare with printed values");
    reproduce->add_option("table", table, "Table id (2, 3, 4 or 5)")->required();

    std::string spec_path;
    auto* sweep = app.add_subcommand("sweep", "Parametric sweep from a JSON spec");
    sweep->add_option("spec", spec_path, "Sweep spec JSON file")->required()->check(CLI::ExistingFile);

    auto* ro = app.add_subcommand("ro", "Risk optimization of the --config scenario");

    std::vector<double> targets;
    bool frontier = false;
    double f_min = 0.0, f_max = 2.0, f_step = 0.05;
    auto* rbdo = app.add_subcommand("rbdo", "Reliability-based design optimization");
    rbdo->add_option("--beta-target", targets, "Target system reliability index (repeatable)")->required();
    rbdo->add_flag("--frontier", frontier, "Trace lambda2_required over lambda1 instead of optimizing");
    rbdo->add_option("--lambda1-min", f_min, "Frontier start");
    rbdo->add_option("--lambda1-max", f_max, "Frontier end");
    rbdo->add_option("--lambda1-step", f_step, "Frontier step");

    double l1[3] = {0.0, 3.0, 0.05};
    double l2[3] = {0.0, 3.0, 0.05};
    std::string quantity = "ro_total";
    auto* contour = app.add_subcommand("contour", "Emit (lambda1, lambda2, value) grid");
    contour->add_option("--lambda1-min", l1[0]);
    contour->add_option("--lambda1-max", l1[1]);
    contour->add_option("--lambda1-step", l1[2]);
    contour->add_option("--lambda2-min", l2[0]);
    contour->add_option("--lambda2-max", l2[1]);
    contour->add_option("--lambda2-step", l2[2]);
    contour->add_option("--quantity", quantity, "ro_total or beta_sys")
        ->check(CLI::IsMember({"ro_total", "beta_sys"}));

    double v1 = 0.0, v2 = 0.0;
    double samples = 1e7;
    auto* validate = app.add_subcommand("validate", "Closed forms against the Monte Carlo oracle");
    validate->add_option("--lambda1", v1, "Design load factor of bar 1")->required();
    validate->add_option("--lambda2", v2, "Design load factor of bar 2")->required();
    validate->add_option("-n,--samples", samples, "Replicates")->check(CLI::Range(1.0, 1e12));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input_error;
    }

    try {
        tb_text* text = nullptr;
        if (*reproduce) return finish(tb_reproduce(table, g.jobs, &text), &text, g);
        if (*sweep) {
            const std::string spec = read_file(spec_path);
            return finish(tb_sweep(spec.c_str(), g.jobs, &text), &text, g);
        }
        const ScenarioPtr s = load_scenario(g);
        if (*ro) return finish(tb_ro(s.get(), g.jobs, &text), &text, g);
        if (*rbdo) {
            if (frontier) {
                if (targets.size() != 1) throw InputError("--frontier takes exactly one --beta-target");
                return finish(tb_rbdo_frontier(s.get(), targets[0], f_min, f_max, f_step, g.jobs, &text), &text, g);
            }
            return finish(tb_rbdo(s.get(), targets.data(), targets.size(), g.jobs, &text), &text, g);
        }
        if (*contour)
            return finish(tb_contour(s.get(), l1[0], l1[1], l1[2], l2[0], l2[1], l2[2], quantity.c_str(), g.jobs,
                                     &text),
                          &text, g);
        if (*validate)
            return finish(tb_validate(s.get(), v1, v2, static_cast<std::uint64_t>(samples), g.seed, g.jobs, &text),
                          &text, g);
    } catch (const InputError& e) {
        std::cerr << "twobar: " << e.what() << '\n';
        return exit_input_error;
    }
    return exit_input_error;
}
