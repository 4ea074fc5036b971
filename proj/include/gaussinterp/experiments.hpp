#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaussinterp/bandlimited.hpp"
#include "gaussinterp/gram.hpp"
#include "gaussinterp/interp1d.hpp"
#include "gaussinterp/io.hpp"
#include "gaussinterp/nodes.hpp"

namespace gaussinterp {

// Errors are measured on the central half of the window span with grid step
// min(q, 1)/20; sup errors are grid maxima. Every threshold flag below is a
// chosen proxy, not a theoretical constant.

struct ConvergenceRow {
    double lambda;
    double l2_error;
    double sup_error;
};

struct ConvergenceReport {
    std::string function_id;
    std::string window_descriptor;
    std::vector<ConvergenceRow> rows;  // decreasing lambda
    bool monotone_l2 = true;           // strictly decreasing
    bool monotone_sup = true;

    [[nodiscard]] Table table() const;
};

/// Rejects lambda > 1, lists that are not strictly decreasing, punctured
/// windows and jitter >= 1/4.
[[nodiscard]] ConvergenceReport run_convergence(const BandlimitedFunction& f,
                                                const NodeWindow& window,
                                                std::span<const double> lambdas);

struct BoundednessRow {
    std::string function_id;
    double lambda;
    double ratio;  // ||I f||_2 / ||f||_2 on the grid
};

struct BoundednessReport {
    std::string window_descriptor;
    std::vector<BoundednessRow> rows;
    double max_ratio = 0.0;
    double min_ratio = 0.0;
    /// Per function, max ratio / min ratio over the lambda list is below 10.
    bool bounded = true;

    [[nodiscard]] Table table() const;
};

[[nodiscard]] BoundednessReport run_uniform_boundedness(std::span<const BandlimitedFunction> fs,
                                                        const NodeWindow& window,
                                                        std::span<const double> lambdas);

struct CounterexampleRow {
    double lambda;
    double sup_error;
    double max_abs_coeff;
};

struct CounterexampleReport {
    int n = 0;
    std::vector<CounterexampleRow> rows;

    [[nodiscard]] Table table() const;
};

/// sinc on the integers with 0 removed: every sample vanishes.
[[nodiscard]] CounterexampleReport run_counterexample(int n, std::span<const double> lambdas);

struct LevinsonRow {
    double lambda;
    double sup_distance;   // grid sup of |L_{l,lambda} - G_l| on the central half
    double node_distance;  // the same, restricted to the nodes
};

struct LevinsonReport {
    double c = 0.0;
    int n = 0;
    int l = 0;
    std::vector<LevinsonRow> rows;
    bool decreasing = true;

    [[nodiscard]] Table table() const;
};

[[nodiscard]] LevinsonReport run_levinson_comparison(double c, int n, int l,
                                                     std::span<const double> lambdas);

struct LpSweepRow {
    int n;
    NormKind p;
    double max_ratio;
};

struct LpSweepReport {
    Family family = Family::uniform;
    double lambda = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<LpSweepRow> rows;  // ordered by p, then N
    /// Per p, |max ratio(largest N) / max ratio(smallest N) - 1| < 0.2.
    bool within_band = true;

    [[nodiscard]] Table table() const;
};

/// Rademacher data for trial t comes from CounterRng(seed, t), entry by position.
/// `params.n` is ignored; the sweep sets it from `ns`.
[[nodiscard]] LpSweepReport run_lp_sweep(Family family, const WindowParams& params, double lambda,
                                         std::span<const int> ns, std::span<const NormKind> ps,
                                         int trials);

struct DecayRow {
    std::string window_descriptor;
    double lambda;
    std::string target;  // "inverse" or "fundamental"
    std::optional<DecayFit> fit;
    std::string status;  // "ok" or the error message
};

struct DecayReport {
    int n = 0;
    std::vector<DecayRow> rows;
    bool rates_positive = true;  // over the rows that were fitted

    [[nodiscard]] Table table() const;
};

struct FamilySpec {
    Family family;
    WindowParams params;  // n is overridden
};

/// Rows flagged with InsufficientData are kept, not fatal.
[[nodiscard]] DecayReport run_decay_study(std::span<const FamilySpec> families,
                                          std::span<const double> lambdas, int n);

struct GridConvergenceRow {
    double lambda;
    double sup_error;
};

struct GridConvergenceReport {
    std::string window_descriptor;
    std::vector<GridConvergenceRow> rows;
    bool monotone = true;  // strictly decreasing up to 1e-12

    [[nodiscard]] Table table() const;
};

/// Interpolates f(x) f(y) on window x window; sup error on the square of
/// central halves.
[[nodiscard]] GridConvergenceReport run_grid_convergence(const BandlimitedFunction& f,
                                                         const NodeWindow& window,
                                                         std::span<const double> lambdas);

[[nodiscard]] std::string_view norm_name(NormKind p) noexcept;
[[nodiscard]] NormKind parse_norm(std::string_view name);

}  // namespace gaussinterp
