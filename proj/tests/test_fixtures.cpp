// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "twobar/fixtures.hpp"

using namespace twobar;

TEST_CASE("printed numbers") {
    CHECK(parse_printed_number("2.942", '.') == 2.942);
    CHECK(parse_printed_number("2,286", ',') == 2.286);
    CHECK(parse_printed_number("-1,865", ',') == -1.865);
    CHECK(parse_printed_number("0", '.') == 0.0);
    CHECK_THROWS_AS(parse_printed_number("2.286", ','), std::invalid_argument);
    CHECK_THROWS_AS(parse_printed_number("", '.'), std::invalid_argument);
    CHECK_THROWS_AS(parse_printed_number("1.2x", '.'), std::invalid_argument);
}

TEST_CASE("embedded tables") {
    CHECK(paper_tables().size() == 4);
    for (int id : {2, 3, 4, 5}) {
        const auto& t = paper_table(id);
        CHECK(t.columns.size() == 8);
        CHECK(t.rows.size() == table_rows.size());
        for (std::size_t c = 0; c < t.columns.size(); ++c) CHECK_NOTHROW(t.scenario(c));
    }
    CHECK_THROWS_AS(paper_table(6), std::out_of_range);

    const auto& t2 = paper_table(2);
    CHECK(t2.expected("beta_sys", 0) == 2.942);
    CHECK(t2.expected("total", 0) == 1.232);
    CHECK(t2.tolerance("lambda1", 0) == 0.05);
    CHECK(t2.tolerance("total", 0) == 0.01);
    CHECK(t2.scenario(1).load.impact == 1.3);

    const auto& t3 = paper_table(3);
    CHECK(t3.expected("beta1", 0) == -2.503);
    CHECK(t3.tolerance("beta1", 0) == 0.005);
    CHECK(t3.tolerance("beta1", 1) == 0.02);

    const auto& t5 = paper_table(5);
    CHECK(t5.base.redundancy == Redundancy::passive);
    CHECK(t5.expected("lambda1", 0) == 2.286);
    CHECK(t5.expected("beta_joint", 1) == 3.373);
    CHECK_FALSE(t5.notes_for(6).empty());
}

TEST_CASE("malformed fixture documents") {
    CHECK_THROWS_AS(parse_paper_tables("{"), std::runtime_error);
    CHECK_THROWS_AS(parse_paper_tables(R"({"version": 2, "tolerances": {}, "tables": []})"), std::runtime_error);
    CHECK(parse_paper_tables(R"({"version": 1, "tolerances": {}, "tables": []})").empty());
}
