#include "gaussinterp/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <nlohmann/json.hpp>

#include "gaussinterp/errors.hpp"

namespace gaussinterp {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != header.size()) {
        throw DimensionMismatch("row has " + std::to_string(row.size()) + " cells, header has " +
                                std::to_string(header.size()));
    }
    rows.push_back(std::move(row));
}

namespace {

std::string quote_csv(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string cell_text(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_number(v);
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return quote_csv(v);
            }
        },
        cell);
}

nlohmann::json cell_json(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> nlohmann::json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                // JSON has no inf/nan; fall back to the CSV spelling.
                if (!std::isfinite(v)) return format_number(v);
                return v;
            } else {
                return v;
            }
        },
        cell);
}

}  // namespace

void write_csv(std::ostream& os, const std::string& config_json, const Table& table) {
    os << "# " << config_json << "\n";
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) os << ',';
        os << quote_csv(table.header[i]);
    }
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << cell_text(row[i]);
        }
        os << "\n";
    }
}

void write_json(std::ostream& os, const std::string& config_json, const Table& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[table.header[i]] = cell_json(row[i]);
        rows.push_back(std::move(obj));
    }
    nlohmann::json doc = {{"config", nlohmann::json::parse(config_json)}, {"rows", rows}};
    os << doc.dump(2) << "\n";
}

}  // namespace gaussinterp
