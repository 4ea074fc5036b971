#include <doctest.h>

#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "gaussinterp/bandlimited.hpp"
#include "gaussinterp/errors.hpp"
#include "gaussinterp/interp1d.hpp"
#include "gaussinterp/interp2d.hpp"
#include "gaussinterp/kernel.hpp"
#include "gaussinterp/random.hpp"

using namespace gaussinterp;

namespace {

Eigen::MatrixXd grid_data(std::size_t nx, std::size_t ny, std::uint64_t seed) {
    const CounterRng rng(seed);
    Eigen::MatrixXd d(static_cast<Eigen::Index>(nx), static_cast<Eigen::Index>(ny));
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
        for (Eigen::Index j = 0; j < d.cols(); ++j) d(i, j) = rng.symmetric(i * 1000 + j, 1.0);
    }
    return d;
}

Eigen::MatrixXd gram(const NodeWindow& w, double lambda) {
    const auto n = static_cast<Eigen::Index>(w.size());
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = gaussian(lambda, w[i] - w[j]);
    }
    return a;
}

}  // namespace

TEST_CASE("1x1 grid") {
    Eigen::MatrixXd d(1, 1);
    d(0, 0) = 2.5;
    const auto I = interpolate_grid(d, explicit_nodes({0.0}), explicit_nodes({1.0}), 0.8);
    CHECK(I.coeff_matrix()(0, 0) == 2.5);
    CHECK(I(0.0, 1.0) == 2.5);
    CHECK(I(0.5, 0.0) == doctest::Approx(2.5 * gaussian(0.8, 0.5) * gaussian(0.8, 1.0)).epsilon(1e-14));
}

TEST_CASE("outer product data separates") {
    const auto wx = uniform_nodes(4);
    const auto wy = kadec_nodes(3, 0.2);
    const double lambda = 0.5;
    const CounterRng rng(3);
    std::vector<double> a(wx.size()), b(wy.size());
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = rng.symmetric(static_cast<std::int64_t>(j), 1.0);
    for (std::size_t j = 0; j < b.size(); ++j) b[j] = rng.symmetric(100 + static_cast<std::int64_t>(j), 1.0);
    const Eigen::Map<const Eigen::VectorXd> av(a.data(), static_cast<Eigen::Index>(a.size()));
    const Eigen::Map<const Eigen::VectorXd> bv(b.data(), static_cast<Eigen::Index>(b.size()));
    const auto I = interpolate_grid(av * bv.transpose(), wx, wy, lambda);
    const auto Ia = interpolate_sequence(a, wx, lambda);
    const auto Ib = interpolate_sequence(b, wy, lambda);
    const Eigen::MatrixXd expected = Ia.coeffs() * Ib.coeffs().transpose();
    CHECK((I.coeff_matrix() - expected).cwiseAbs().maxCoeff() <= 1e-9 * expected.cwiseAbs().maxCoeff());
    for (double x : {-3.3, 0.2, 1.7}) {
        for (double y : {-2.0, 0.45}) CHECK(std::abs(I(x, y) - Ia(x) * Ib(y)) < 1e-10);
    }
}

TEST_CASE("zero data") {
    const auto w = uniform_nodes(3);
    const auto I = interpolate_grid(Eigen::MatrixXd::Zero(7, 7), w, w, 0.3);
    CHECK(I.coeff_matrix().cwiseAbs().maxCoeff() == 0.0);
    CHECK(I(0.4, -1.0) == 0.0);
}

TEST_CASE("matches the Kronecker system") {
    const auto wx = uniform_nodes(2);
    const auto wy = jittered_nodes(2, 0.2, 11);
    const double lambda = 1.0;
    const auto d = grid_data(wx.size(), wy.size(), 5);
    const auto I = interpolate_grid(d, wx, wy, lambda);

    const Eigen::MatrixXd ax = gram(wx, lambda);
    const Eigen::MatrixXd ay = gram(wy, lambda);
    const auto nx = ax.rows();
    const auto ny = ay.rows();
    Eigen::MatrixXd k(nx * ny, nx * ny);
    for (Eigen::Index i = 0; i < nx; ++i) {
        for (Eigen::Index j = 0; j < nx; ++j) k.block(i * ny, j * ny, ny, ny) = ax(i, j) * ay;
    }
    Eigen::VectorXd rhs(nx * ny);
    for (Eigen::Index i = 0; i < nx; ++i) {
        for (Eigen::Index j = 0; j < ny; ++j) rhs(i * ny + j) = d(i, j);
    }
    const Eigen::VectorXd c = k.fullPivLu().solve(rhs);
    for (Eigen::Index i = 0; i < nx; ++i) {
        for (Eigen::Index j = 0; j < ny; ++j) CHECK(std::abs(I.coeff_matrix()(i, j) - c(i * ny + j)) < 1e-10);
    }
}

TEST_CASE("interpolates at grid points") {
    const auto w = uniform_nodes(5);
    for (double lambda : {0.1, 0.5, 1.0}) {
        const auto d = grid_data(w.size(), w.size(), 17);
        const auto I = interpolate_grid(d, w, w, lambda);
        CHECK(I.max_grid_residual() < 1e-9);
        CHECK(std::abs(I(w[2], w[7]) - d(2, 7)) < 1e-9);
        CHECK(I.precision_bits() >= 64);
    }
}

TEST_CASE("grid evaluation agrees with pointwise evaluation") {
    const auto w = kadec_nodes(3, 0.25);
    const auto I = interpolate_grid(grid_data(w.size(), w.size(), 2), w, w, 0.4);
    const std::vector<double> xs{-2.5, -0.1, 0.0, 1.3};
    const std::vector<double> ys{-1.0, 0.7, 2.9};
    const auto v = I.evaluate_grid(xs, ys);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t k = 0; k < ys.size(); ++k) {
            CHECK(std::abs(v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) - I(xs[i], ys[k])) <
                  1e-14);
        }
    }
    CHECK(evaluate2d(I, 0.3, 0.2) == I(0.3, 0.2));
}

TEST_CASE("product function on a product grid") {
    const auto w = uniform_nodes(10);
    const auto f = sinc_function();
    Eigen::MatrixXd d(21, 21);
    for (Eigen::Index i = 0; i < 21; ++i) {
        for (Eigen::Index j = 0; j < 21; ++j) d(i, j) = f(w[i]) * f(w[j]);
    }
    const auto I = interpolate_grid(d, w, w, 0.5);
    const auto J = interpolate_function(f, w, 0.5);
    for (double x : {-1.5, 0.25, 2.0}) CHECK(std::abs(I(x, x) - J(x) * J(x)) < 1e-10);
}

TEST_CASE("far field and errors") {
    const auto w = uniform_nodes(2);
    const auto I = interpolate_grid(grid_data(5, 5, 1), w, w, 1.0);
    CHECK(I(1e6, 0.0) == 0.0);
    CHECK_THROWS_AS((void)I(std::numeric_limits<double>::infinity(), 0.0), NonFinite);
    CHECK_THROWS_AS((void)interpolate_grid(Eigen::MatrixXd::Zero(5, 4), w, w, 1.0), DimensionMismatch);
    Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(5, 5);
    bad(1, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS((void)interpolate_grid(bad, w, w, 1.0), NonFinite);
    CHECK_THROWS_AS((void)interpolate_grid(Eigen::MatrixXd::Zero(5, 5), w, w, -1.0), InvalidArgument);
}

TEST_CASE("dumps") {
    const auto w = uniform_nodes(1);
    const auto I = interpolate_grid(grid_data(3, 3, 8), w, w, 1.0);
    const auto c = grid_coefficient_table(I);
    CHECK(c.header == std::vector<std::string>{"i", "j", "x", "y", "coeff"});
    CHECK(c.rows.size() == 9);
    const std::vector<double> xs{0.0, 0.5};
    CHECK(grid_values_table(I, xs, xs).rows.size() == 4);
}
