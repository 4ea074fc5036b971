#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace gaussinterp {

/// Shortest-stable text form used in every output file: 17 significant digits.
[[nodiscard]] std::string format_number(double v);

using Cell = std::variant<double, std::int64_t, std::string, bool>;

/// Plot-ready rows with a fixed header. Every experiment report converts to one.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

/// RFC-4180-style CSV: `#` config echo line, header row, one line per row.
/// `config_json` must be a single-line JSON document.
void write_csv(std::ostream& os, const std::string& config_json, const Table& table);

/// {"config": <config>, "rows": [{column: value, ...}, ...]}
void write_json(std::ostream& os, const std::string& config_json, const Table& table);

}  // namespace gaussinterp
