// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "twobar/config.hpp"
#include "twobar/harness.hpp"
#include "twobar/optimize.hpp"

using namespace twobar;

namespace {

using Row = std::map<std::string, std::string>;

std::vector<Row> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    std::vector<std::string> header;
    std::stringstream hs(line);
    for (std::string f; std::getline(hs, f, ',');) header.push_back(f);
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        Row r;
        std::size_t k = 0;
        std::string field;
        bool quoted = false;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            const char c = i < line.size() ? line[i] : ',';
            if (c == '"') {
                if (quoted && i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = !quoted;
                }
            } else if (c == ',' && !quoted) {
                r[header.at(k++)] = field;
                field.clear();
            } else {
                field += c;
            }
        }
        REQUIRE(k == header.size());
        rows.push_back(std::move(r));
    }
    return rows;
}

double num(const Row& r, const std::string& key) { return std::stod(r.at(key)); }

}  // namespace

TEST_CASE("format_number") {
    CHECK(format_number(1.5) == "1.5");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1e-300) == "1e-300");
    CHECK(format_number(0.1) == "0.1");
}

TEST_CASE("reproduce: table layout and determinism") {
    const auto a = run_reproduce(2, 1);
    const auto b = run_reproduce(2, 4);
    CHECK(a.csv == b.csv);
    CHECK_FALSE(a.failed);
    CHECK(a.csv.find('\r') == std::string::npos);
    const auto rows = parse_csv(a.csv);
    CHECK(rows.size() == 8 * 15);
    for (const auto& r : rows) CHECK(r.at("status") == "PASS");
    CHECK_THROWS_AS(run_reproduce(7), HarnessInputError);
}

TEST_CASE("reproduce: single-bar columns at low latent probability") {
    const auto rows = parse_csv(run_reproduce(4).csv);
    for (const auto& r : rows)
        if (r.at("quantity") == "lambda1" && r.at("pL") == "0.001") CHECK(num(r, "computed") == 0.0);
}

TEST_CASE("sweep: degenerate spec equals a direct optimization") {
    const auto out = run_sweep(R"({"mode": "ro"})");
    const auto rows = parse_csv(out.csv);
    REQUIRE(rows.size() == 1);
    const auto direct = ro_optimize(Scenario::paper_default());
    CHECK(num(rows[0], "lambda1") == direct.best.lambda1);
    CHECK(num(rows[0], "total") == direct.costs.total);
}

TEST_CASE("sweep: sixteen combinations contain the reference table") {
    const auto out = run_sweep(
        R"({"axes": {"pL": [0.001, 0.01], "impact": [1.0, 1.3], "eta": [0, 1], "rho12": [0, 0.5]}})", 0);
    const auto rows = parse_csv(out.csv);
    REQUIRE(rows.size() == 16);
    CHECK(rows[0].at("pL1") == "0.001");
    CHECK(rows[15].at("pL1") == "0.01");
    // Axes vary in declaration order with the first slowest; eta is fastest.
    CHECK(rows[1].at("eta") == "1");
    CHECK(rows[2].at("rho12") == "0.5");
    const auto t2 = parse_csv(run_reproduce(2).csv);
    int matched = 0;
    for (const auto& r : rows) {
        if (r.at("rho12") != "0") continue;
        for (const auto& t : t2)
            if (t.at("quantity") == "total" && t.at("pL") == r.at("pL1") && t.at("impact") == r.at("impact") &&
                t.at("eta") == r.at("eta")) {
                CHECK(num(r, "total") == doctest::Approx(num(t, "computed")).epsilon(1e-9));
                ++matched;
            }
    }
    CHECK(matched == 8);
}

TEST_CASE("sweep: reciprocal strengths swap the optimum") {
    const auto rows = parse_csv(run_sweep(R"({"axes": {"mean_ratio": [9, 0.1111111111111111]}})").csv);
    REQUIRE(rows.size() == 2);
    CHECK(num(rows[0], "mu1") == doctest::Approx(1.0));
    CHECK(num(rows[0], "mu2") == doctest::Approx(9.0));
    CHECK(num(rows[0], "lambda1") == doctest::Approx(num(rows[1], "lambda2")).epsilon(1e-3));
    CHECK(num(rows[0], "lambda2") == doctest::Approx(num(rows[1], "lambda1")).epsilon(1e-3));
    CHECK(num(rows[0], "total") == doctest::Approx(num(rows[1], "total")).epsilon(1e-6));
}

TEST_CASE("sweep: input errors") {
    CHECK_THROWS_AS(run_sweep("{"), HarnessInputError);
    CHECK_THROWS_AS(run_sweep(R"({"axes": {"colour": [1]}})"), HarnessInputError);
    CHECK_THROWS_AS(run_sweep(R"({"axes": {"rho12": [0.2, 1.0]}})"), HarnessInputError);
    CHECK_THROWS_AS(run_sweep(R"({"axes": {"mean_ratio": [0]}})"), HarnessInputError);
    CHECK_THROWS_AS(run_sweep(R"({"mode": "rbdo"})"), HarnessInputError);
    CHECK_THROWS_AS(run_sweep(R"({"extra": 1})"), HarnessInputError);
    CHECK_THROWS_AS(run_sweep(R"({"base": {"colour": 1}})"), ConfigError);
    const auto rows = parse_csv(run_sweep(R"({"mode": "rbdo", "beta_targets": [2.5, 3.5]})").csv);
    CHECK(rows.size() == 2);
}

TEST_CASE("contour: symmetric grid and consistency with the optimizer") {
    GridSpec g;
    g.lambda1_step = g.lambda2_step = 0.1;
    const auto rows = parse_csv(run_contour(Scenario::paper_default(), g, 3).csv);
    const std::size_t n = 31;
    REQUIRE(rows.size() == n * n);
    double best = 1e300;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(std::abs(num(rows[i * n + j], "ro_total") - num(rows[j * n + i], "ro_total")) <= 1e-12);
            if (num(rows[i * n + j], "ro_total") < best) best = num(rows[i * n + j], "ro_total"), arg = i * n + j;
        }
    const auto r = ro_optimize(Scenario::paper_default());
    CHECK(std::abs(num(rows[arg], "lambda1") - r.best.lambda1) <= 0.1 + 1e-9);
    CHECK(std::abs(num(rows[arg], "lambda2") - r.best.lambda2) <= 0.1 + 1e-9);

    g.quantity = "beta_sys";
    const auto beta = parse_csv(run_contour(Scenario::paper_default(), g).csv);
    const double bl = Scenario::paper_default().latent.beta_latent();
    for (std::size_t i = 0; i < n; ++i) CHECK(num(beta[i * n], "beta_sys") <= bl + 1e-6);
}

TEST_CASE("contour: input errors") {
    GridSpec g;
    g.lambda1_step = 0.0;
    CHECK_THROWS_AS(run_contour(Scenario::paper_default(), g), HarnessInputError);
    g = GridSpec{};
    g.lambda1_max = 1e4;
    g.lambda1_step = 1e-3;
    CHECK_THROWS_AS(run_contour(Scenario::paper_default(), g), HarnessInputError);
    g = GridSpec{};
    g.quantity = "cost";
    CHECK_THROWS_AS(run_contour(Scenario::paper_default(), g), HarnessInputError);
    g = GridSpec{};
    g.lambda2_min = -1.0;
    CHECK_THROWS_AS(run_contour(Scenario::paper_default(), g), HarnessInputError);
}

TEST_CASE("ro and rbdo outputs") {
    const auto ro = parse_csv(run_ro(Scenario::paper_default()).csv);
    REQUIRE_FALSE(ro.empty());
    CHECK(ro[0].at("kind") == "best");
    const auto rb = parse_csv(run_rbdo(Scenario::paper_default(), {2.942, 9.0}).csv);
    REQUIRE(rb.size() == 2);
    CHECK(rb[0].at("feasible") == "true");
    CHECK(rb[1].at("feasible") == "false");
    CHECK_FALSE(rb[1].at("max_beta_sys").empty());
    CHECK_THROWS_AS(run_rbdo(Scenario::paper_default(), {}), HarnessInputError);
    const auto fr = parse_csv(run_frontier(Scenario::paper_default(), 2.5, 0.0, 2.0, 0.5).csv);
    CHECK(fr.size() == 5);
}

TEST_CASE("validate: certain connection failure agrees exactly") {
    Scenario s = Scenario::paper_default();
    s.latent = {1.0, 1.0};
    const auto out = run_validate(s, {1.0, 1.0}, 10000, 1);
    CHECK_FALSE(out.failed);
    for (const auto& r : parse_csv(out.csv))
        if (r.at("quantity") == "p_sys") {
            CHECK(r.at("status") == "PASS");
            CHECK(num(r, "oracle") == 1.0);
        }
}

TEST_CASE("validate: convention mismatch is flagged") {
    Scenario s = Scenario::paper_default();
    s.rho12 = 0.9;
    const auto rows = parse_csv(run_validate(s, {1.0, 1.0}, 20000, 2).csv);
    bool flagged = false;
    for (const auto& r : rows) flagged = flagged || r.at("note").find("convention mismatch") != std::string::npos;
    CHECK(flagged);
}

TEST_CASE("validate: gap is registered before sampling") {
    const auto out = run_validate(Scenario::paper_default(), {1.110, 1.110}, 200000, 7, 4);
    for (const auto& r : parse_csv(out.csv))
        if (r.at("quantity") == "p_sys") CHECK(r.at("status") == "KNOWN-GAP");
    const auto again = run_validate(Scenario::paper_default(), {1.110, 1.110}, 200000, 7, 1);
    CHECK(out.csv == again.csv);
}
