// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#include "twobar/fixtures.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include <json.hpp>

namespace twobar {
namespace detail {
extern const char* const paper_fixtures_json;
}

namespace {

using nlohmann::json;

Material material_from(const json& j) {
    Material m;
    m.mean = j.at("mean").get<double>();
    m.cov = j.at("cov").get<double>();
    return m;
}

bool contains(const std::vector<int>& columns, std::size_t column) {
    return std::find(columns.begin(), columns.end(), static_cast<int>(column) + 1) != columns.end();
}

}  // namespace

const std::vector<std::string> table_rows = {
    "lambda1", "lambda2", "a1", "a2", "beta1", "beta_2g1", "beta_joint",
    "beta_sys", "material", "sf", "pc", "dc", "total",
};

double parse_printed_number(std::string_view text, char separator) {
    std::string s(text);
    if (separator != '.') {
        if (s.find('.') != std::string::npos)
            throw std::invalid_argument("unexpected '.' in '" + s + "'");
        std::replace(s.begin(), s.end(), separator, '.');
    }
    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (s.empty() || ec != std::errc{} || ptr != last)
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    return value;
}

Scenario PaperTable::scenario(std::size_t column) const {
    const TableColumn& c = columns.at(column);
    Scenario s = base;
    s.latent = {c.p_latent1, c.p_latent2};
    s.rho12 = c.rho12;
    s.material1.eta = c.eta;
    s.material2.eta = c.eta;
    s.load.impact = c.impact;
    return validate_scenario(s);
}

double PaperTable::expected(const std::string& row, std::size_t column) const {
    return rows.at(row).at(column);
}

double PaperTable::tolerance(const std::string& row, std::size_t column) const {
    double tol = tolerances.at(row);
    for (const auto& o : overrides)
        if (o.row == row && contains(o.columns, column)) tol = o.tolerance;
    return tol;
}

std::vector<std::string> PaperTable::notes_for(std::size_t column) const {
    std::vector<std::string> out;
    for (const auto& n : notes)
        if (contains(n.columns, column)) out.push_back(n.note);
    for (const auto& o : overrides)
        if (contains(o.columns, column)) out.push_back(o.note);
    return out;
}

std::vector<PaperTable> parse_paper_tables(std::string_view text) {
    try {
        const json doc = json::parse(text.begin(), text.end());
        if (doc.at("version").get<int>() != 1) throw std::runtime_error("unsupported fixtures version");
        std::map<std::string, double> tolerances;
        for (const auto& [key, value] : doc.at("tolerances").items()) tolerances[key] = value.get<double>();

        std::vector<PaperTable> out;
        for (const auto& t : doc.at("tables")) {
            PaperTable table;
            table.id = t.at("id").get<int>();
            table.title = t.at("title").get<std::string>();
            table.tolerances = tolerances;
            const std::string redundancy = t.at("redundancy").get<std::string>();
            if (redundancy != "active_passive" && redundancy != "passive")
                throw std::runtime_error("unknown redundancy '" + redundancy + "'");
            table.base.redundancy = redundancy == "passive" ? Redundancy::passive : Redundancy::active_passive;
            table.base.material1 = material_from(t.at("material1"));
            table.base.material2 = material_from(t.at("material2"));
            table.base.load.mean = t.at("load").at("mean").get<double>();
            table.base.load.cov = t.at("load").at("cov").get<double>();
            const auto& k = t.at("costs");
            table.base.costs = {k.at("kSF").get<double>(), k.at("kPC").get<double>(), k.at("kDC").get<double>()};

            for (const auto& c : t.at("columns"))
                table.columns.push_back({c.at("pL1").get<double>(), c.at("pL2").get<double>(),
                                         c.at("rho12").get<double>(), c.at("eta").get<double>(),
                                         c.at("impact").get<double>()});

            const std::string sep = t.at("decimal_separator").get<std::string>();
            if (sep.size() != 1) throw std::runtime_error("decimal_separator must be one character");
            for (const auto& row : table_rows) {
                std::vector<double> values;
                for (const auto& cell : t.at("rows").at(row))
                    values.push_back(parse_printed_number(cell.get<std::string>(), sep[0]));
                if (values.size() != table.columns.size())
                    throw std::runtime_error("row '" + row + "' has the wrong number of cells");
                table.rows[row] = std::move(values);
            }
            for (const auto& o : t.at("overrides"))
                table.overrides.push_back({o.at("row").get<std::string>(), o.at("columns").get<std::vector<int>>(),
                                           o.at("tolerance").get<double>(), o.at("note").get<std::string>()});
            for (const auto& n : t.at("notes"))
                table.notes.push_back({n.at("columns").get<std::vector<int>>(), n.at("note").get<std::string>()});
            out.push_back(std::move(table));
        }
        return out;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed fixtures: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("malformed fixtures: ") + e.what());
    }
}

const std::vector<PaperTable>& paper_tables() {
    static const std::vector<PaperTable> tables = parse_paper_tables(detail::paper_fixtures_json);
    return tables;
}

const PaperTable& paper_table(int id) {
    for (const auto& t : paper_tables())
        if (t.id == id) return t;
    throw std::out_of_range("unknown table id " + std::to_string(id) + " (expected 2, 3, 4 or 5)");
}

}  // namespace twobar
