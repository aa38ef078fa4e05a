// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TWOBAR_FIXTURES_HPP
#define TWOBAR_FIXTURES_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "twobar/model.hpp"

namespace twobar {

/// Row keys of the paper tables, in print order.
extern const std::vector<std::string> table_rows;

struct TableColumn {
    double p_latent1 = 0.0;
    double p_latent2 = 0.0;
    double rho12 = 0.0;
    double eta = 0.0;
    double impact = 1.0;
};

struct ToleranceOverride {
    std::string row;
    std::vector<int> columns;  // 1-based
    double tolerance = 0.0;
    std::string note;
};

struct ColumnNote {
    std::vector<int> columns;  // 1-based
    std::string note;
};

/// One published table with expected values already normalized to '.'
/// decimals.
struct PaperTable {
    int id = 0;
    std::string title;
    Scenario base;
    std::vector<TableColumn> columns;
    std::map<std::string, std::vector<double>> rows;
    std::map<std::string, double> tolerances;
    std::vector<ToleranceOverride> overrides;
    std::vector<ColumnNote> notes;

    /// Scenario of a 0-based column.
    Scenario scenario(std::size_t column) const;
    double expected(const std::string& row, std::size_t column) const;
    /// Tolerance of a cell, after per-cell overrides.
    double tolerance(const std::string& row, std::size_t column) const;
    std::vector<std::string> notes_for(std::size_t column) const;
};

/// Converts a printed number using `separator` as the decimal mark.
/// Throws std::invalid_argument on anything but a plain decimal number.
double parse_printed_number(std::string_view text, char separator);

/// Parses a fixtures document. Throws std::runtime_error when malformed.
std::vector<PaperTable> parse_paper_tables(std::string_view json);

/// Tables embedded at build time.
const std::vector<PaperTable>& paper_tables();

/// Embedded table by id; throws std::out_of_range for unknown ids.
const PaperTable& paper_table(int id);

}  // namespace twobar

#endif  // TWOBAR_FIXTURES_HPP
