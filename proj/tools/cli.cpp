#include "gaussinterp/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include "gaussinterp/bandlimited.hpp"
#include "gaussinterp/errors.hpp"
#include "gaussinterp/experiments.hpp"
#include "gaussinterp/gram.hpp"
#include "gaussinterp/interp1d.hpp"
#include "gaussinterp/interp2d.hpp"
#include "gaussinterp/io.hpp"
#include "gaussinterp/nodes.hpp"
#include "gaussinterp/quadrature.hpp"

namespace gaussinterp::cli {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kCommands = {"interp",   "fundamental",    "spectrum", "converge",
                                            "bounded",  "decay",          "lpsweep",  "grid2d",
                                            "counterexample", "levinson", "riesz"};

[[noreturn]] void flag_error(const std::string& flag, const std::string& what) {
    throw InvalidArgument(flag + ": " + what);
}

std::string show(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

bool is_command(const std::string& name) {
    return std::find(kCommands.begin(), kCommands.end(), name) != kCommands.end();
}

NodeWindow build_window(const RunConfig& cfg, int n) {
    Family family{};
    try {
        family = parse_family(cfg.window);
    } catch (const Error& e) {
        flag_error("--window", e.message());
    }
    if (family == Family::explicit_nodes) {
        if (cfg.nodes.empty()) flag_error("--nodes", "explicit windows need a node list");
        try {
            return explicit_nodes(cfg.nodes);
        } catch (const Error& e) {
            if (e.is_usage_error()) flag_error("--nodes", e.message());
            throw;
        }
    }
    const int min_n = family == Family::punctured ? 2 : 1;
    if (n < min_n) flag_error("--n", "must be at least " + std::to_string(min_n));
    if (family == Family::kadec && !(std::abs(cfg.c) > 0.0 && std::abs(cfg.c) < 0.5)) {
        flag_error("--c", "Kadec parameter must satisfy 0 < |c| < 1/2, got " + show(cfg.c));
    }
    if (family == Family::jittered && !(cfg.delta >= 0.0 && cfg.delta < 0.5)) {
        flag_error("--delta", "jitter must satisfy 0 <= delta < 1/2, got " + show(cfg.delta));
    }
    return make_window(family, {.n = n, .c = cfg.c, .delta = cfg.delta, .seed = cfg.seed});
}

NodeWindow build_window(const RunConfig& cfg) { return build_window(cfg, cfg.n); }

const std::vector<double>& lambdas(const RunConfig& cfg, bool single, bool decreasing, bool at_most_one) {
    const std::string flag = single ? "--lambda" : "--lambdas";
    if (cfg.lambdas.empty()) flag_error(flag, "is required");
    if (single && cfg.lambdas.size() != 1) flag_error(flag, "takes exactly one value");
    for (std::size_t i = 0; i < cfg.lambdas.size(); ++i) {
        const double l = cfg.lambdas[i];
        if (!(l > 0.0) || !std::isfinite(l)) flag_error(flag, "values must be positive, got " + show(l));
        if (at_most_one && l > 1.0) flag_error(flag, "values must not exceed 1, got " + show(l));
        if (decreasing && i > 0 && !(l < cfg.lambdas[i - 1])) flag_error(flag, "must be strictly decreasing");
    }
    return cfg.lambdas;
}

BandlimitedFunction function(const std::string& spec) {
    try {
        return parse_function(spec);
    } catch (const Error& e) {
        if (e.is_usage_error()) flag_error("--fn", e.message());
        throw;
    }
}

const std::string& single_function(const RunConfig& cfg) {
    if (cfg.fn.size() != 1) flag_error("--fn", "takes exactly one function");
    return cfg.fn.front();
}

std::vector<double> grid_points(double a, double b, double step) {
    const Grid grid(a, b, step);
    std::vector<double> xs(grid.points());
    for (std::size_t k = 0; k < xs.size(); ++k) xs[k] = grid[k];
    return xs;
}

std::vector<double> span_grid(const NodeWindow& w) {
    if (w.size() == 1) return grid_points(w.front() - 5.0, w.front() + 5.0, 0.05);
    return grid_points(w.front(), w.back(), w.q() / 20.0);
}

std::string dump_mode(const RunConfig& cfg, const std::string& fallback,
                      std::initializer_list<const char*> allowed) {
    const std::string mode = cfg.dump.empty() ? fallback : cfg.dump;
    for (const char* a : allowed) {
        if (mode == a) return mode;
    }
    flag_error("--dump", "unsupported value '" + mode + "' for " + cfg.command);
}

Table run_interp(const RunConfig& cfg) {
    const auto w = build_window(cfg);
    const double lam = lambdas(cfg, true, false, false).front();
    const auto interp = interpolate_function(function(single_function(cfg)), w, lam);
    if (dump_mode(cfg, "values", {"values", "coeffs"}) == "coeffs") return coefficient_table(interp);
    return interpolant_table(interp, span_grid(w));
}

Table run_fundamental(const RunConfig& cfg) {
    const auto w = build_window(cfg);
    const double lam = lambdas(cfg, true, false, false).front();
    std::size_t pos = 0;
    try {
        pos = w.position(cfg.l);
    } catch (const Error& e) {
        flag_error("--l", e.message());
    }
    const auto fundamental = fundamental_function(w, lam, pos);
    if (dump_mode(cfg, "values", {"values", "coeffs"}) == "coeffs") return coefficient_table(fundamental);
    return interpolant_table(fundamental, span_grid(w));
}

Table run_spectrum(const RunConfig& cfg) {
    const auto w = build_window(cfg);
    const double lam = lambdas(cfg, true, false, false).front();
    const auto interp = interpolate_function(function(single_function(cfg)), w, lam);
    const double pi = std::numbers::pi;
    return spectrum_table(InterpolantSpectrum(interp), grid_points(-2.0 * pi, 2.0 * pi, pi / 100.0));
}

Table run_converge(const RunConfig& cfg) {
    const auto w = build_window(cfg);
    const auto& lam = lambdas(cfg, false, true, true);
    if (w.family() == Family::punctured) flag_error("--window", "punctured windows do not converge");
    if (w.family() == Family::jittered && cfg.delta >= 0.25) flag_error("--delta", "must be below 1/4");
    return run_convergence(function(single_function(cfg)), w, lam).table();
}

Table run_bounded(const RunConfig& cfg) {
    const auto w = build_window(cfg);
    const auto& lam = lambdas(cfg, false, false, true);
    if (cfg.fn.empty()) flag_error("--fn", "needs at least one function");
    std::vector<BandlimitedFunction> fs;
    for (const auto& spec : cfg.fn) fs.push_back(function(spec));
    return run_uniform_boundedness(fs, w, lam).table();
}

Table run_decay(const RunConfig& cfg) {
    if (cfg.n < 10) flag_error("--n", "decay studies need N >= 10");
    const auto& lam = lambdas(cfg, false, false, false);
    std::vector<std::string> names = cfg.families.empty() ? std::vector<std::string>{cfg.window} : cfg.families;
    std::vector<FamilySpec> specs;
    for (const auto& name : names) {
        RunConfig one = cfg;
        one.window = name;
        const auto w = build_window(one);  // validates the family parameters
        if (w.family() == Family::explicit_nodes) flag_error("--families", "explicit windows are not a family");
        specs.push_back({w.family(), w.params()});
    }
    return run_decay_study(specs, lam, cfg.n).table();
}

Table run_lpsweep(const RunConfig& cfg) {
    const double lam = lambdas(cfg, true, false, false).front();
    if (cfg.ns.empty()) flag_error("--ns", "is required");
    for (std::size_t i = 0; i < cfg.ns.size(); ++i) {
        if (i > 0 && !(cfg.ns[i] > cfg.ns[i - 1])) flag_error("--ns", "must be strictly increasing");
    }
    if (cfg.trials < 1) flag_error("--trials", "must be at least 1");
    std::vector<NormKind> ps;
    for (const auto& p : cfg.p) {
        try {
            ps.push_back(parse_norm(p));
        } catch (const Error& e) {
            flag_error("--p", e.message());
        }
    }
    if (ps.empty()) flag_error("--p", "needs at least one norm");
    const auto w = build_window(cfg, cfg.ns.front());
    if (w.family() == Family::explicit_nodes) flag_error("--window", "explicit windows cannot be swept over N");
    return run_lp_sweep(w.family(), w.params(), lam, cfg.ns, ps, cfg.trials).table();
}

Table run_grid2d(const RunConfig& cfg) {
    const auto w = build_window(cfg);
    const auto f = function(single_function(cfg));
    const std::string mode = dump_mode(cfg, "errors", {"errors", "values", "coeffs"});
    if (mode == "errors") return run_grid_convergence(f, w, lambdas(cfg, false, true, true)).table();

    const double lam = lambdas(cfg, false, false, false).front();
    if (cfg.lambdas.size() != 1) flag_error("--lambdas", "--dump " + mode + " takes exactly one value");
    const auto n = static_cast<Eigen::Index>(w.size());
    Eigen::MatrixXd data(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index m = 0; m < n; ++m) data(j, m) = f(w[j]) * f(w[m]);
    }
    const auto interp = interpolate_grid(data, w, w, lam);
    if (mode == "coeffs") return grid_coefficient_table(interp);
    const auto [a, b] = w.central_half();
    const auto xs = grid_points(a, b, std::min(w.q(), 1.0) / 4.0);
    return grid_values_table(interp, xs, xs);
}

Table run_counterexample_cmd(const RunConfig& cfg) {
    if (cfg.n < 2) flag_error("--n", "must be at least 2");
    return run_counterexample(cfg.n, lambdas(cfg, false, false, false)).table();
}

Table run_levinson(const RunConfig& cfg) {
    if (!(std::abs(cfg.c) > 0.0 && std::abs(cfg.c) < 0.5)) {
        flag_error("--c", "must satisfy 0 < |c| < 1/2, got " + show(cfg.c));
    }
    if (cfg.n < 1) flag_error("--n", "must be at least 1");
    if (std::abs(cfg.l) > cfg.n) flag_error("--l", "must lie in the window");
    return run_levinson_comparison(cfg.c, cfg.n, cfg.l, lambdas(cfg, false, true, false)).table();
}

Table run_riesz(const RunConfig& cfg) {
    const auto w = build_window(cfg);
    const auto b = riesz_bounds_estimate(w);
    Table t;
    t.header = {"window", "size", "q", "Q", "riesz_lower", "riesz_upper"};
    t.add_row({w.descriptor(), static_cast<std::int64_t>(w.size()), w.q(), w.Q(), b.lower, b.upper});
    return t;
}

Table run_command(const RunConfig& cfg) {
    const auto& c = cfg.command;
    if (c == "interp") return run_interp(cfg);
    if (c == "fundamental") return run_fundamental(cfg);
    if (c == "spectrum") return run_spectrum(cfg);
    if (c == "converge") return run_converge(cfg);
    if (c == "bounded") return run_bounded(cfg);
    if (c == "decay") return run_decay(cfg);
    if (c == "lpsweep") return run_lpsweep(cfg);
    if (c == "grid2d") return run_grid2d(cfg);
    if (c == "counterexample") return run_counterexample_cmd(cfg);
    if (c == "levinson") return run_levinson(cfg);
    if (c == "riesz") return run_riesz(cfg);
    flag_error("command", "unknown command '" + c + "'");
}

template <class T>
void read_field(const json& j, const char* key, T& value) {
    if (j.contains(key)) value = j.at(key).get<T>();
}

}  // namespace

std::string to_json(const RunConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    j["window"] = cfg.window;
    j["n"] = cfg.n;
    j["c"] = cfg.c;
    j["delta"] = cfg.delta;
    j["seed"] = cfg.seed;
    j["nodes"] = cfg.nodes;
    j["lambdas"] = cfg.lambdas;
    j["fn"] = cfg.fn;
    j["l"] = cfg.l;
    j["p"] = cfg.p;
    j["trials"] = cfg.trials;
    j["ns"] = cfg.ns;
    j["families"] = cfg.families;
    j["dump"] = cfg.dump;
    j["format"] = cfg.format;
    if (!cfg.out.empty()) j["out"] = cfg.out;
    return j.dump();
}

RunConfig from_json(const std::string& text) {
    RunConfig cfg;
    try {
        const auto j = json::parse(text);
        if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
        if (!j.contains("command")) throw InvalidArgument("config has no command");
        read_field(j, "command", cfg.command);
        read_field(j, "window", cfg.window);
        read_field(j, "n", cfg.n);
        read_field(j, "c", cfg.c);
        read_field(j, "delta", cfg.delta);
        read_field(j, "seed", cfg.seed);
        read_field(j, "nodes", cfg.nodes);
        read_field(j, "lambdas", cfg.lambdas);
        read_field(j, "fn", cfg.fn);
        read_field(j, "l", cfg.l);
        read_field(j, "p", cfg.p);
        read_field(j, "trials", cfg.trials);
        read_field(j, "ns", cfg.ns);
        read_field(j, "families", cfg.families);
        read_field(j, "dump", cfg.dump);
        read_field(j, "format", cfg.format);
        read_field(j, "out", cfg.out);
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed config: ") + e.what());
    }
    return cfg;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (!is_command(cfg.command)) flag_error("command", "unknown command '" + cfg.command + "'");
        if (cfg.format != "csv" && cfg.format != "json") flag_error("--format", "must be csv or json");
        const Table table = run_command(cfg);

        RunConfig echo = cfg;
        echo.out.clear();
        std::ostringstream text;
        if (cfg.format == "csv") {
            write_csv(text, to_json(echo), table);
        } else {
            write_json(text, to_json(echo), table);
        }
        if (cfg.out.empty() || cfg.out == "-") {
            out << text.str();
        } else {
            std::ofstream file(cfg.out, std::ios::binary);
            if (!file) flag_error("--out", "cannot open '" + cfg.out + "' for writing");
            file << text.str();
            if (!file) flag_error("--out", "failed writing '" + cfg.out + "'");
        }
        return 0;
    } catch (const Error& e) {
        if (e.is_usage_error()) {
            err << "usage error: " << e.message() << "\n";
            return 2;
        }
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "InternalError: " << e.what() << "\n";
        return 1;
    }
}

int parse_and_dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gaussian interpolation on bi-infinite node windows", "gaussinterp"};
    app.require_subcommand(0, 1);

    RunConfig cfg;
    std::string config_path;
    std::string config_out;
    app.add_option("--config", config_path, "Replay a saved JSON config")->check(CLI::ExistingFile);
    app.add_option("--out", config_out, "Output path for --config runs");

    auto window_flags = [&](CLI::App* s) {
        s->add_option("--window", cfg.window, "uniform, kadec, jittered, punctured or explicit")
            ->capture_default_str();
        s->add_option("--n", cfg.n, "Window half-width N")->capture_default_str();
        s->add_option("--c", cfg.c, "Kadec parameter")->capture_default_str();
        s->add_option("--delta", cfg.delta, "Jitter half-width")->capture_default_str();
        s->add_option("--seed", cfg.seed, "Jitter seed")->capture_default_str();
        s->add_option("--nodes", cfg.nodes, "Explicit nodes, comma separated")->delimiter(',');
    };
    auto output_flags = [&](CLI::App* s) {
        s->add_option("--out", cfg.out, "Output file (stdout if omitted)");
        s->add_option("--format", cfg.format, "csv or json")->capture_default_str();
    };
    auto lambda_flag = [&](CLI::App* s) {
        s->add_option("--lambda", cfg.lambdas, "Kernel scale")->expected(1)->required();
    };
    auto lambdas_flag = [&](CLI::App* s) {
        s->add_option("--lambdas", cfg.lambdas, "Kernel scales, comma separated")->delimiter(',')->required();
    };
    auto fn_flag = [&](CLI::App* s) {
        s->add_option("--fn", cfg.fn, "Function spec, e.g. sinc or 'kind=combo;shifts=0,3;weights=3,4'")
            ->capture_default_str();
    };
    auto dump_flag = [&](CLI::App* s, const char* help) { s->add_option("--dump", cfg.dump, help); };

    std::map<std::string, CLI::App*> subs;
    auto sub = [&](const std::string& name, const std::string& help) {
        auto* s = app.add_subcommand(name, help);
        subs[name] = s;
        output_flags(s);
        return s;
    };

    auto* s = sub("interp", "Interpolate a bandlimited function");
    window_flags(s); lambda_flag(s); fn_flag(s); dump_flag(s, "values or coeffs");
    s = sub("fundamental", "Fundamental function L_l");
    window_flags(s); lambda_flag(s); dump_flag(s, "values or coeffs");
    s->add_option("--l", cfg.l, "Signed node index")->capture_default_str();
    s = sub("spectrum", "Fourier transform of an interpolant");
    window_flags(s); lambda_flag(s); fn_flag(s);
    s = sub("converge", "Errors as lambda decreases");
    window_flags(s); lambdas_flag(s); fn_flag(s);
    s = sub("bounded", "Norm ratios ||I f|| / ||f||");
    window_flags(s); lambdas_flag(s); fn_flag(s);
    s = sub("decay", "Exponential decay of A^-1 and L_0");
    window_flags(s); lambdas_flag(s);
    s->add_option("--families", cfg.families, "Window families, comma separated")->delimiter(',');
    s = sub("lpsweep", "l_p stability over random sign data");
    window_flags(s); lambda_flag(s);
    s->add_option("--ns", cfg.ns, "Window half-widths, comma separated")->delimiter(',')->required();
    s->add_option("--p", cfg.p, "Norms from 1, 2, inf")->delimiter(',')->capture_default_str();
    s->add_option("--trials", cfg.trials, "Random vectors per cell")->capture_default_str();
    s = sub("grid2d", "Tensor-product interpolation of f(x) f(y)");
    window_flags(s); lambdas_flag(s); fn_flag(s); dump_flag(s, "errors, values or coeffs");
    s = sub("counterexample", "Integers without 0, f = sinc");
    s->add_option("--n", cfg.n, "Window half-width N")->capture_default_str();
    lambdas_flag(s);
    s = sub("levinson", "Distance from L_l to the closed-form limit");
    s->add_option("--c", cfg.c, "Kadec parameter")->capture_default_str();
    s->add_option("--n", cfg.n, "Window half-width N")->capture_default_str();
    s->add_option("--l", cfg.l, "Signed node index")->capture_default_str();
    lambdas_flag(s);
    s = sub("riesz", "Riesz bound estimate of a window");
    window_flags(s);

    std::vector<const char*> args;
    args.reserve(argv.size());
    for (const auto& a : argv) args.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(args.size()), args.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (!config_path.empty()) {
        if (!app.get_subcommands().empty()) {
            err << "usage error: --config: cannot be combined with a subcommand\n";
            return 2;
        }
        std::ifstream in(config_path, std::ios::binary);
        std::stringstream text;
        text << in.rdbuf();
        RunConfig loaded;
        try {
            loaded = from_json(text.str());
        } catch (const Error& e) {
            err << "usage error: --config: " << e.message() << "\n";
            return 2;
        }
        if (!config_out.empty()) loaded.out = config_out;
        return dispatch(loaded, out, err);
    }
    if (app.get_subcommands().empty()) {
        err << "usage error: a subcommand or --config is required\n" << app.help();
        return 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return dispatch(cfg, out, err);
}

}  // namespace gaussinterp::cli
