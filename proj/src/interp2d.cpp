#include "gaussinterp/interp2d.hpp"

#include <algorithm>
#include <cmath>

#include "gaussinterp/errors.hpp"
#include "gaussinterp/kernel.hpp"
#include "mp.hpp"
#include "parallel.hpp"

namespace gaussinterp {

namespace detail {

struct GridState {
    NodeWindow wx;
    NodeWindow wy;
    double lambda;
    long bits;
    Eigen::MatrixXd data;
    std::vector<MpVector> rows;  // rows[j][m] = C(j, m)
    Eigen::MatrixXd coeffs;
};

}  // namespace detail

namespace {

constexpr double kGuardBits = 96.0;

// G(i, j) = e^{-lambda (t_i - s_j)^2}.
std::vector<detail::MpVector> kernel_rows(std::span<const double> t, std::span<const double> s,
                                          double lambda, mpfr_prec_t bits) {
    std::vector<detail::MpVector> g(t.size());
    detail::parallel_for(t.size(), [&](std::size_t i) {
        g[i] = detail::make_vector(s.size(), bits);
        for (std::size_t j = 0; j < s.size(); ++j) detail::gaussian_mp(g[i][j], lambda, t[i], s[j]);
    }, 8);
    return g;
}

void check_point(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) throw NonFinite("evaluation point must be finite");
}

}  // namespace

long tensor_precision_bits(const GramSystem& gx, const GramSystem& gy) {
    const double need = kGuardBits + (gx.log2_norm() - gx.log2_smallest_eigenvalue()) +
                        (gy.log2_norm() - gy.log2_smallest_eigenvalue()) + 32.0;
    return std::min(static_cast<long>(std::ceil(need)), GramSystem::kMaxPrecisionBits);
}

GridInterpolant2D interpolate_grid(const Eigen::MatrixXd& data, const NodeWindow& wx,
                                   const NodeWindow& wy, double lambda) {
    if (static_cast<std::size_t>(data.rows()) != wx.size() ||
        static_cast<std::size_t>(data.cols()) != wy.size()) {
        throw DimensionMismatch("grid data is " + std::to_string(data.rows()) + "x" +
                                std::to_string(data.cols()) + ", nodes are " +
                                std::to_string(wx.size()) + "x" + std::to_string(wy.size()));
    }
    if (!data.allFinite()) throw NonFinite("grid data must be finite");

    GramSystem gx(wx, lambda);
    GramSystem gy(wy, lambda);
    const long bits = tensor_precision_bits(gx, gy);
    if (gx.precision_bits() < bits) gx = GramSystem(wx, lambda, 0.0, bits);
    if (gy.precision_bits() < bits) gy = GramSystem(wy, lambda, 0.0, bits);
    const auto prec = static_cast<mpfr_prec_t>(std::max(gx.precision_bits(), gy.precision_bits()));

    const auto nx = wx.size();
    const auto ny = wy.size();

    // T = A_x^{-1} D, column by column.
    std::vector<detail::MpVector> cols(ny);
    detail::parallel_for(ny, [&](std::size_t k) {
        cols[k] = detail::make_vector(nx, prec);
        for (std::size_t j = 0; j < nx; ++j) {
            mpfr_set_d(cols[k][j].get(), data(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)),
                       MPFR_RNDN);
        }
        gx.factor().solve_in_place(cols[k]);
    }, 1);

    // C = T A_y^{-1}, row by row (A_y is symmetric).
    auto state = std::make_shared<detail::GridState>(
        detail::GridState{wx, wy, Scale(lambda).value(), prec, data, {}, {}});
    state->rows.resize(nx);
    detail::parallel_for(nx, [&](std::size_t j) {
        auto& row = state->rows[j];
        row.reserve(ny);
        for (std::size_t k = 0; k < ny; ++k) row.push_back(cols[k][j]);
        gy.factor().solve_in_place(row);
    }, 1);

    state->coeffs.resize(static_cast<Eigen::Index>(nx), static_cast<Eigen::Index>(ny));
    for (std::size_t j = 0; j < nx; ++j) {
        for (std::size_t k = 0; k < ny; ++k) {
            state->coeffs(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
                state->rows[j][k].to_double();
        }
    }
    return GridInterpolant2D(std::move(state));
}

const NodeWindow& GridInterpolant2D::window_x() const noexcept { return state_->wx; }
const NodeWindow& GridInterpolant2D::window_y() const noexcept { return state_->wy; }
double GridInterpolant2D::lambda() const noexcept { return state_->lambda; }
const Eigen::MatrixXd& GridInterpolant2D::coeff_matrix() const noexcept { return state_->coeffs; }
const Eigen::MatrixXd& GridInterpolant2D::data() const noexcept { return state_->data; }
long GridInterpolant2D::precision_bits() const noexcept { return state_->bits; }

double GridInterpolant2D::operator()(double x, double y) const {
    check_point(x, y);
    const auto& s = *state_;
    const auto prec = static_cast<mpfr_prec_t>(s.bits);
    const auto xn = s.wx.nodes();
    const auto yn = s.wy.nodes();
    detail::MpVector gy = detail::make_vector(yn.size(), prec);
    for (std::size_t m = 0; m < yn.size(); ++m) detail::gaussian_mp(gy[m], s.lambda, y, yn[m]);
    detail::MpReal total(prec);
    detail::MpReal inner(prec);
    detail::MpReal g(prec);
    for (std::size_t j = 0; j < xn.size(); ++j) {
        mpfr_set_zero(inner.get(), 1);
        for (std::size_t m = 0; m < yn.size(); ++m) {
            mpfr_fma(inner.get(), s.rows[j][m].get(), gy[m].get(), inner.get(), MPFR_RNDN);
        }
        detail::gaussian_mp(g, s.lambda, x, xn[j]);
        mpfr_fma(total.get(), inner.get(), g.get(), total.get(), MPFR_RNDN);
    }
    return total.to_double();
}

Eigen::MatrixXd GridInterpolant2D::evaluate_grid(std::span<const double> xs,
                                                 std::span<const double> ys) const {
    for (double x : xs) check_point(x, 0.0);
    for (double y : ys) check_point(0.0, y);
    const auto& s = *state_;
    const auto prec = static_cast<mpfr_prec_t>(s.bits);
    const auto nx = s.wx.size();
    const auto ny = s.wy.size();

    const auto gx = kernel_rows(xs, s.wx.nodes(), s.lambda, prec);
    const auto gy = kernel_rows(ys, s.wy.nodes(), s.lambda, prec);

    // T(j, k) = sum_m C(j, m) G_y(k, m)
    std::vector<detail::MpVector> t(nx);
    detail::parallel_for(nx, [&](std::size_t j) {
        t[j] = detail::make_vector(ys.size(), prec);
        for (std::size_t k = 0; k < ys.size(); ++k) {
            for (std::size_t m = 0; m < ny; ++m) {
                mpfr_fma(t[j][k].get(), s.rows[j][m].get(), gy[k][m].get(), t[j][k].get(), MPFR_RNDN);
            }
        }
    }, 1);

    Eigen::MatrixXd out(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(ys.size()));
    detail::parallel_for(xs.size(), [&](std::size_t i) {
        detail::MpReal acc(prec);
        for (std::size_t k = 0; k < ys.size(); ++k) {
            mpfr_set_zero(acc.get(), 1);
            for (std::size_t j = 0; j < nx; ++j) {
                mpfr_fma(acc.get(), gx[i][j].get(), t[j][k].get(), acc.get(), MPFR_RNDN);
            }
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = acc.to_double();
        }
    }, 4);
    return out;
}

double GridInterpolant2D::max_grid_residual() const {
    const auto v = evaluate_grid(state_->wx.nodes(), state_->wy.nodes());
    return (v - state_->data).cwiseAbs().maxCoeff();
}

double evaluate2d(const GridInterpolant2D& interp, double x, double y) { return interp(x, y); }

Table grid_values_table(const GridInterpolant2D& interp, std::span<const double> xs,
                        std::span<const double> ys) {
    const auto v = interp.evaluate_grid(xs, ys);
    Table t;
    t.header = {"x", "y", "value"};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t k = 0; k < ys.size(); ++k) {
            t.add_row({xs[i], ys[k], v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k))});
        }
    }
    return t;
}

Table grid_coefficient_table(const GridInterpolant2D& interp) {
    const auto& c = interp.coeff_matrix();
    Table t;
    t.header = {"i", "j", "x", "y", "coeff"};
    const auto& wx = interp.window_x();
    const auto& wy = interp.window_y();
    for (std::size_t j = 0; j < wx.size(); ++j) {
        for (std::size_t m = 0; m < wy.size(); ++m) {
            t.add_row({static_cast<std::int64_t>(j) - static_cast<std::int64_t>(wx.center()),
                       static_cast<std::int64_t>(m) - static_cast<std::int64_t>(wy.center()), wx[j], wy[m],
                       c(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(m))});
        }
    }
    return t;
}

}  // namespace gaussinterp
