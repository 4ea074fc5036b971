#include "gaussinterp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gaussinterp/errors.hpp"
#include "gaussinterp/interp2d.hpp"
#include "gaussinterp/kernel.hpp"
#include "gaussinterp/quadrature.hpp"
#include "gaussinterp/random.hpp"
#include "parallel.hpp"

namespace gaussinterp {

namespace {

std::vector<double> grid_points(const Grid& grid) {
    std::vector<double> xs(grid.points());
    for (std::size_t k = 0; k < xs.size(); ++k) xs[k] = grid[k];
    return xs;
}

Grid error_grid(const NodeWindow& w) {
    const auto [a, b] = w.central_half();
    return Grid(a, b, std::min(w.q(), 1.0) / 20.0);
}

void require_lambdas(std::span<const double> lambdas) {
    if (lambdas.empty()) throw InvalidArgument("the lambda list is empty");
    for (double l : lambdas) {
        if (!(l > 0.0) || !std::isfinite(l)) {
            throw InvalidArgument("lambda must be positive and finite, got " + format_number(l));
        }
    }
}

void require_decreasing(std::span<const double> lambdas) {
    require_lambdas(lambdas);
    for (std::size_t i = 1; i < lambdas.size(); ++i) {
        if (!(lambdas[i] < lambdas[i - 1])) {
            throw InvalidArgument("lambdas must be strictly decreasing");
        }
    }
}

void require_at_most_one(std::span<const double> lambdas) {
    for (double l : lambdas) {
        if (l > 1.0) throw InvalidArgument("lambda must not exceed 1, got " + format_number(l));
    }
}

void require_riesz_family(const NodeWindow& w) {
    if (w.family() == Family::punctured) {
        throw InvalidArgument("punctured windows are not a Riesz-basis family");
    }
    if (w.family() == Family::jittered && w.params().delta >= 0.25) {
        throw InvalidArgument("jitter must be below 1/4 for convergence runs");
    }
}

bool strictly_decreasing(const std::vector<double>& v, double slack = 0.0) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] < v[i - 1] + slack)) return false;
    }
    return true;
}

std::string bool_cell(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string_view norm_name(NormKind p) noexcept {
    switch (p) {
        case NormKind::l1: return "1";
        case NormKind::l2: return "2";
        case NormKind::linf: return "inf";
    }
    return "?";
}

NormKind parse_norm(std::string_view name) {
    if (name == "1") return NormKind::l1;
    if (name == "2") return NormKind::l2;
    if (name == "inf") return NormKind::linf;
    throw InvalidArgument("unknown norm '" + std::string(name) + "', expected 1, 2 or inf");
}

ConvergenceReport run_convergence(const BandlimitedFunction& f, const NodeWindow& window,
                                  std::span<const double> lambdas) {
    require_decreasing(lambdas);
    require_at_most_one(lambdas);
    require_riesz_family(window);

    const Grid grid = error_grid(window);
    const auto xs = grid_points(grid);
    std::vector<double> exact(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) exact[k] = f(xs[k]);

    ConvergenceReport report{f.id(), window.descriptor(), std::vector<ConvergenceRow>(lambdas.size())};
    detail::parallel_for(lambdas.size(), [&](std::size_t i) {
        const auto interp = interpolate_function(f, window, lambdas[i]);
        auto err = interp.evaluate(xs);
        double sup = 0.0;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            err[k] = std::abs(err[k] - exact[k]);
            sup = std::max(sup, err[k]);
            err[k] *= err[k];
        }
        report.rows[i] = {lambdas[i], std::sqrt(simpson(err, grid.h())), sup};
    }, 1);

    std::vector<double> l2;
    std::vector<double> sup;
    for (const auto& r : report.rows) {
        l2.push_back(r.l2_error);
        sup.push_back(r.sup_error);
    }
    report.monotone_l2 = strictly_decreasing(l2);
    report.monotone_sup = strictly_decreasing(sup);
    return report;
}

Table ConvergenceReport::table() const {
    Table t;
    t.header = {"function", "window", "lambda", "l2_error", "sup_error", "monotone_l2", "monotone_sup"};
    for (const auto& r : rows) {
        t.add_row({function_id, window_descriptor, r.lambda, r.l2_error, r.sup_error,
                   bool_cell(monotone_l2), bool_cell(monotone_sup)});
    }
    return t;
}

BoundednessReport run_uniform_boundedness(std::span<const BandlimitedFunction> fs,
                                          const NodeWindow& window,
                                          std::span<const double> lambdas) {
    if (fs.empty()) throw InvalidArgument("the function set is empty");
    require_lambdas(lambdas);
    require_at_most_one(lambdas);

    const Grid grid = error_grid(window);
    const auto xs = grid_points(grid);
    std::vector<double> f_norm(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        std::vector<double> sq(xs.size());
        for (std::size_t k = 0; k < xs.size(); ++k) sq[k] = fs[i](xs[k]) * fs[i](xs[k]);
        f_norm[i] = std::sqrt(simpson(sq, grid.h()));
        if (f_norm[i] == 0.0) throw ZeroData(fs[i].id() + " vanishes on the measurement grid");
    }

    const std::size_t cells = fs.size() * lambdas.size();
    BoundednessReport report{window.descriptor(), std::vector<BoundednessRow>(cells)};
    detail::parallel_for(cells, [&](std::size_t c) {
        const std::size_t i = c / lambdas.size();
        const double lambda = lambdas[c % lambdas.size()];
        const auto interp = interpolate_function(fs[i], window, lambda);
        auto v = interp.evaluate(xs);
        for (double& s : v) s *= s;
        report.rows[c] = {fs[i].id(), lambda, std::sqrt(simpson(v, grid.h())) / f_norm[i]};
    }, 1);

    report.max_ratio = 0.0;
    report.min_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        double hi = 0.0;
        double lo = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < lambdas.size(); ++k) {
            const double r = report.rows[i * lambdas.size() + k].ratio;
            hi = std::max(hi, r);
            lo = std::min(lo, r);
        }
        report.max_ratio = std::max(report.max_ratio, hi);
        report.min_ratio = std::min(report.min_ratio, lo);
        if (!(hi < 10.0 * lo)) report.bounded = false;
    }
    return report;
}

Table BoundednessReport::table() const {
    Table t;
    t.header = {"function", "window", "lambda", "ratio", "bounded"};
    for (const auto& r : rows) t.add_row({r.function_id, window_descriptor, r.lambda, r.ratio, bool_cell(bounded)});
    return t;
}

CounterexampleReport run_counterexample(int n, std::span<const double> lambdas) {
    require_lambdas(lambdas);
    const auto window = punctured_integer_nodes(n);
    const auto f = sinc_function();
    const Grid grid = error_grid(window);
    const auto xs = grid_points(grid);

    CounterexampleReport report{n, std::vector<CounterexampleRow>(lambdas.size())};
    detail::parallel_for(lambdas.size(), [&](std::size_t i) {
        const auto interp = interpolate_function(f, window, lambdas[i]);
        const auto v = interp.evaluate(xs);
        double sup = 0.0;
        for (std::size_t k = 0; k < xs.size(); ++k) sup = std::max(sup, std::abs(f(xs[k]) - v[k]));
        report.rows[i] = {lambdas[i], sup, interp.coeffs().cwiseAbs().maxCoeff()};
    }, 1);
    return report;
}

Table CounterexampleReport::table() const {
    Table t;
    t.header = {"n", "lambda", "sup_error", "max_abs_coeff"};
    for (const auto& r : rows) t.add_row({static_cast<std::int64_t>(n), r.lambda, r.sup_error, r.max_abs_coeff});
    return t;
}

LevinsonReport run_levinson_comparison(double c, int n, int l, std::span<const double> lambdas) {
    require_decreasing(lambdas);
    const auto window = kadec_nodes(n, c);
    const std::size_t pos = window.position(l);
    const HigginsG higgins(c);
    const auto g = higgins.fundamental(l);

    const auto [a, b] = window.central_half();
    const auto xs = grid_points(Grid(a, b, window.q() / 20.0));
    std::vector<double> gx(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) gx[k] = g(xs[k]);
    std::vector<double> at_nodes;
    std::vector<double> g_nodes;
    for (double x : window.nodes()) {
        if (x >= a && x <= b) {
            at_nodes.push_back(x);
            g_nodes.push_back(g(x));
        }
    }

    LevinsonReport report{c, n, l, std::vector<LevinsonRow>(lambdas.size())};
    detail::parallel_for(lambdas.size(), [&](std::size_t i) {
        const auto fundamental = fundamental_function(window, lambdas[i], pos);
        const auto v = fundamental.evaluate(xs);
        double sup = 0.0;
        for (std::size_t k = 0; k < xs.size(); ++k) sup = std::max(sup, std::abs(v[k] - gx[k]));
        const auto vn = fundamental.evaluate(at_nodes);
        double node = 0.0;
        for (std::size_t k = 0; k < vn.size(); ++k) node = std::max(node, std::abs(vn[k] - g_nodes[k]));
        report.rows[i] = {lambdas[i], sup, node};
    }, 1);

    std::vector<double> d;
    for (const auto& r : report.rows) d.push_back(r.sup_distance);
    report.decreasing = strictly_decreasing(d);
    return report;
}

Table LevinsonReport::table() const {
    Table t;
    t.header = {"c", "n", "l", "lambda", "sup_distance", "node_distance", "decreasing"};
    for (const auto& r : rows) {
        t.add_row({c, static_cast<std::int64_t>(n), static_cast<std::int64_t>(l), r.lambda, r.sup_distance,
                   r.node_distance, bool_cell(decreasing)});
    }
    return t;
}

LpSweepReport run_lp_sweep(Family family, const WindowParams& params, double lambda,
                           std::span<const int> ns, std::span<const NormKind> ps, int trials) {
    if (trials < 1) throw InvalidArgument("trials must be at least 1");
    if (ns.empty()) throw InvalidArgument("the N list is empty");
    if (ps.empty()) throw InvalidArgument("the norm list is empty");
    for (std::size_t i = 1; i < ns.size(); ++i) {
        if (!(ns[i] > ns[i - 1])) throw InvalidArgument("N values must be strictly increasing");
    }
    const double lam = Scale(lambda).value();

    std::vector<std::vector<double>> best(ns.size(), std::vector<double>(ps.size(), 0.0));
    detail::parallel_for(ns.size(), [&](std::size_t i) {
        WindowParams p = params;
        p.n = ns[i];
        const GramSystem system(make_window(family, p), lam);
        for (int t = 0; t < trials; ++t) {
            const CounterRng rng(params.seed, static_cast<std::uint64_t>(t));
            std::vector<double> y(system.size());
            for (std::size_t j = 0; j < y.size(); ++j) y[j] = rng.rademacher(static_cast<std::int64_t>(j));
            for (std::size_t k = 0; k < ps.size(); ++k) {
                best[i][k] = std::max(best[i][k], lp_norm_ratio(system, y, ps[k]));
            }
        }
    }, 1);

    LpSweepReport report{family, lam, trials, params.seed, {}};
    for (std::size_t k = 0; k < ps.size(); ++k) {
        for (std::size_t i = 0; i < ns.size(); ++i) report.rows.push_back({ns[i], ps[k], best[i][k]});
        const double change = best.back()[k] / best.front()[k] - 1.0;
        if (!(std::abs(change) < 0.2)) report.within_band = false;
    }
    return report;
}

Table LpSweepReport::table() const {
    Table t;
    t.header = {"family", "lambda", "trials", "seed", "n", "p", "max_ratio", "within_band"};
    for (const auto& r : rows) {
        t.add_row({std::string(family_name(family)), lambda, static_cast<std::int64_t>(trials),
                   std::to_string(seed), static_cast<std::int64_t>(r.n), std::string(norm_name(r.p)),
                   r.max_ratio, bool_cell(within_band)});
    }
    return t;
}

DecayReport run_decay_study(std::span<const FamilySpec> families, std::span<const double> lambdas,
                            int n) {
    if (n < 10) throw InvalidArgument("decay studies need N >= 10, got " + std::to_string(n));
    if (families.empty()) throw InvalidArgument("the family list is empty");
    require_lambdas(lambdas);

    std::vector<NodeWindow> windows;
    for (const auto& spec : families) {
        WindowParams p = spec.params;
        p.n = n;
        windows.push_back(make_window(spec.family, p));
    }

    const std::size_t cells = windows.size() * lambdas.size();
    std::vector<DecayRow> rows(2 * cells);
    detail::parallel_for(cells, [&](std::size_t c) {
        const auto& w = windows[c / lambdas.size()];
        const double lambda = lambdas[c % lambdas.size()];
        const GramSystem system(w, lambda);
        auto& inv = rows[2 * c];
        inv = {w.descriptor(), lambda, "inverse", std::nullopt, "ok"};
        try {
            inv.fit = measure_inverse_decay(system);
        } catch (const InsufficientData& e) {
            inv.status = e.what();
        }
        auto& fun = rows[2 * c + 1];
        fun = {w.descriptor(), lambda, "fundamental", std::nullopt, "ok"};
        try {
            fun.fit = fundamental_decay(fundamental_function(system, w.center()), w.center());
        } catch (const InsufficientData& e) {
            fun.status = e.what();
        }
    }, 1);

    DecayReport report{n, std::move(rows)};
    for (const auto& r : report.rows) {
        if (r.fit && !(r.fit->rate > 0.0)) report.rates_positive = false;
    }
    return report;
}

Table DecayReport::table() const {
    Table t;
    t.header = {"window", "lambda", "target", "rate", "amplitude", "residual", "points", "status"};
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const auto& r : rows) {
        t.add_row({r.window_descriptor, r.lambda, r.target, r.fit ? r.fit->rate : nan,
                   r.fit ? r.fit->amplitude : nan, r.fit ? r.fit->residual : nan,
                   static_cast<std::int64_t>(r.fit ? r.fit->points : 0), r.status});
    }
    return t;
}

GridConvergenceReport run_grid_convergence(const BandlimitedFunction& f, const NodeWindow& window,
                                           std::span<const double> lambdas) {
    require_decreasing(lambdas);
    require_at_most_one(lambdas);
    require_riesz_family(window);

    const auto xs = grid_points(error_grid(window));
    std::vector<double> fx(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) fx[k] = f(xs[k]);
    const auto n = static_cast<Eigen::Index>(window.size());
    Eigen::MatrixXd data(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index m = 0; m < n; ++m) data(j, m) = f(window[j]) * f(window[m]);
    }

    GridConvergenceReport report{window.descriptor() + "^2", {}};
    for (double lambda : lambdas) {
        const auto interp = interpolate_grid(data, window, window, lambda);
        const auto v = interp.evaluate_grid(xs, xs);
        double sup = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            for (std::size_t k = 0; k < xs.size(); ++k) {
                sup = std::max(sup, std::abs(v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) -
                                             fx[i] * fx[k]));
            }
        }
        report.rows.push_back({lambda, sup});
    }
    std::vector<double> s;
    for (const auto& r : report.rows) s.push_back(r.sup_error);
    report.monotone = strictly_decreasing(s, 1e-12);
    return report;
}

Table GridConvergenceReport::table() const {
    Table t;
    t.header = {"window", "lambda", "sup_error", "monotone"};
    for (const auto& r : rows) t.add_row({window_descriptor, r.lambda, r.sup_error, bool_cell(monotone)});
    return t;
}

}  // namespace gaussinterp
