#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gaussinterp::cli {

/// Everything a command reads. Serialized to one JSON line and echoed as the
/// `#` preamble of CSV output (or the "config" member of JSON output).
struct RunConfig {
    std::string command;
    std::string window = "uniform";
    int n = 20;
    double c = 0.2;
    double delta = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> nodes;    // explicit windows only
    std::vector<double> lambdas;  // --lambda is a one-element list
    std::vector<std::string> fn{"sinc"};
    int l = 0;
    std::vector<std::string> p{"2"};
    int trials = 20;
    std::vector<int> ns;
    std::vector<std::string> families;
    std::string dump;  // empty: the command default
    std::string format = "csv";
    std::string out;  // empty or "-" writes to stdout; never echoed

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

[[nodiscard]] std::string to_json(const RunConfig& config);
/// Throws InvalidArgument on malformed or incomplete documents.
[[nodiscard]] RunConfig from_json(const std::string& text);

/// Runs one configured command. Returns 0, 1 (numerical failure, error name on
/// `err`) or 2 (usage error naming the flag).
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// argv[0] is the program name. `--config file.json` replays a saved config.
int parse_and_dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace gaussinterp::cli
