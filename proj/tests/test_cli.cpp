#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gaussinterp/cli.hpp"
#include "gaussinterp/errors.hpp"

using namespace gaussinterp;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "gaussinterp");
    std::ostringstream out, err;
    const int code = cli::parse_and_dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("gaussinterp_cli_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) v.push_back(line);
    return v;
}

}  // namespace

TEST_CASE("converge writes a config line, a header and one row per lambda") {
    const auto path = temp_file("converge.csv");
    std::filesystem::remove(path);
    const auto r = run({"converge", "--window", "uniform", "--n", "10", "--lambdas", "1,0.5,0.25,0.1", "--out",
                        path.string()});
    REQUIRE(r.code == 0);
    const auto l = lines(slurp(path));
    REQUIRE(l.size() == 6);
    CHECK(l[0].rfind("# {", 0) == 0);
    CHECK(l[1] == "function,window,lambda,l2_error,sup_error,monotone_l2,monotone_sup");
    const auto config = nlohmann::json::parse(l[0].substr(2));
    CHECK(config["command"] == "converge");
    CHECK_FALSE(config.contains("out"));
    std::filesystem::remove(path);
}

TEST_CASE("invalid kadec parameter is a usage error naming the flag") {
    const auto r = run({"interp", "--window", "kadec", "--c", "0.7", "--lambda", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--c") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("usage errors") {
    CHECK(run({"interp", "--lambda", "1", "--bogus", "1"}).code == 2);
    CHECK(run({"interp"}).code == 2);
    CHECK(run({"nosuchcommand"}).code == 2);
    const auto neg = run({"interp", "--lambda", "-1"});
    CHECK(neg.code == 2);
    CHECK(neg.err.find("--lambda") != std::string::npos);
    CHECK(run({"converge", "--lambdas", "0.5,1"}).code == 2);
    CHECK(run({"lpsweep", "--lambda", "1", "--ns", "10,20", "--trials", "0"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("numerical failure exits with 1 and the error name") {
    std::string nodes;
    for (int k = 0; k < 12; ++k) nodes += (k ? "," : "") + std::to_string(k) + "e-300";
    const auto r = run({"interp", "--window", "explicit", "--nodes", nodes, "--lambda", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("FactorizationFailure") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("counterexample output") {
    const auto r = run({"counterexample", "--n", "5", "--lambdas", "1,0.1"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 4);
    CHECK(l[1] == "n,lambda,sup_error,max_abs_coeff");
    CHECK(l[2].substr(l[2].rfind(',') + 1) == "0");
}

TEST_CASE("config json round trip") {
    cli::RunConfig c;
    c.command = "lpsweep";
    c.window = "jittered";
    c.delta = 0.2;
    c.seed = 12345678901234567ULL;
    c.lambdas = {0.5};
    c.ns = {10, 20};
    c.p = {"1", "inf"};
    c.fn = {"sinc", "kind=fejer"};
    CHECK(cli::from_json(cli::to_json(c)) == c);
    CHECK_THROWS_AS((void)cli::from_json("{not json"), InvalidArgument);
    CHECK_THROWS_AS((void)cli::from_json("{\"n\": 3}"), InvalidArgument);
}

TEST_CASE("config replay reproduces output byte for byte") {
    const auto a = run({"converge", "--n", "5", "--lambdas", "1,0.5", "--fn", "kind=fejer"});
    REQUIRE(a.code == 0);
    const auto first = lines(a.out)[0];
    const auto cfg = temp_file("config.json");
    {
        std::ofstream(cfg) << first.substr(2);
    }
    const auto b = run({"--config", cfg.string()});
    CHECK(b.code == 0);
    CHECK(b.out == a.out);
    std::filesystem::remove(cfg);
    CHECK(run({"--config", temp_file("missing.json").string()}).code == 2);
}

TEST_CASE("reruns are byte identical") {
    const std::vector<std::string> args{"lpsweep", "--window", "jittered", "--delta", "0.2", "--seed", "3",
                                        "--lambda", "1", "--ns", "5,10", "--p", "2", "--trials", "3"};
    const auto a = run(args);
    const auto b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("json format") {
    const auto r = run({"counterexample", "--n", "3", "--lambdas", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["config"]["command"] == "counterexample");
    CHECK(doc["rows"].size() == 1);
}

TEST_CASE("other subcommands run") {
    CHECK(run({"interp", "--n", "3", "--lambda", "1"}).code == 0);
    CHECK(run({"interp", "--n", "3", "--lambda", "1", "--dump", "coeffs"}).code == 0);
    CHECK(run({"fundamental", "--n", "3", "--l", "1", "--lambda", "1"}).code == 0);
    CHECK(run({"spectrum", "--n", "3", "--lambda", "1"}).code == 0);
    CHECK(run({"riesz", "--window", "kadec", "--n", "5"}).code == 0);
    CHECK(run({"grid2d", "--n", "3", "--lambdas", "1,0.5"}).code == 0);
    CHECK(run({"grid2d", "--n", "2", "--lambdas", "1", "--dump", "coeffs"}).code == 0);
    CHECK(run({"levinson", "--n", "5", "--lambdas", "1,0.5"}).code == 0);
    CHECK(run({"bounded", "--n", "5", "--lambdas", "1,0.5", "--fn", "sinc", "--fn", "kind=fejer"}).code == 0);
    CHECK(run({"decay", "--n", "10", "--lambdas", "1", "--families", "uniform,kadec"}).code == 0);
}
