#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "gaussinterp/errors.hpp"
#include "gaussinterp/gram.hpp"
#include "gaussinterp/kernel.hpp"
#include "gaussinterp/random.hpp"

using namespace gaussinterp;

namespace {

// Inverse of a 3x3 matrix from the adjugate.
Eigen::Matrix3d cofactor_inverse(const Eigen::Matrix3d& m) {
    Eigen::Matrix3d adj;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
        }
    }
    const double det = m(0, 0) * adj(0, 0) + m(0, 1) * adj(1, 0) + m(0, 2) * adj(2, 0);
    return adj / det;
}

std::vector<double> unit(std::size_t n, std::size_t l) {
    std::vector<double> e(n, 0.0);
    e[l] = 1.0;
    return e;
}

}  // namespace

TEST_CASE("assemble a 3x3 system") {
    const GramSystem s(uniform_nodes(1), 1.0);
    const double e1 = std::exp(-1.0);
    const double e4 = std::exp(-4.0);
    Eigen::Matrix3d expected;
    expected << 1, e1, e4, e1, 1, e1, e4, e1, 1;
    CHECK((s.matrix() - expected).cwiseAbs().maxCoeff() < 1e-16);
    CHECK(s.matrix() == s.matrix().transpose());
    CHECK(s.size() == 3);
    CHECK(s.bandwidth() == 2);

    const auto rhs = unit(3, 1);
    const Eigen::Vector3d oracle = cofactor_inverse(expected).col(1);
    CHECK((s.solve(rhs) - oracle).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(s.solve_residual(rhs) < 1e-12);
}

TEST_CASE("single node") {
    const GramSystem s(explicit_nodes({0.3}), 2.0);
    CHECK(s.matrix()(0, 0) == 1.0);
    const std::vector<double> y{4.5};
    CHECK(s.solve(y)(0) == 4.5);
    CHECK(s.inverse_column(0)(0) == 1.0);
}

TEST_CASE("zero right-hand side and dimension checks") {
    const GramSystem s(uniform_nodes(5), 0.5);
    const std::vector<double> zero(11, 0.0);
    CHECK(s.solve(zero).cwiseAbs().maxCoeff() == 0.0);
    const std::vector<double> short_rhs(10, 1.0);
    CHECK_THROWS_AS((void)s.solve(short_rhs), DimensionMismatch);
    CHECK_THROWS_AS((void)s.inverse_column(11), IndexOutOfRange);
    CHECK_THROWS_AS(GramSystem(uniform_nodes(2), 0.0), InvalidArgument);
    CHECK_THROWS_AS(GramSystem(uniform_nodes(2), 1.0, -1.0), InvalidArgument);
}

TEST_CASE("near-diagonal system") {
    const GramSystem s(uniform_nodes(2), 50.0);
    for (std::size_t l = 0; l < 5; ++l) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(5);
        e(static_cast<Eigen::Index>(l)) = 1.0;
        CHECK((s.inverse_column(l) - e).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("smallest eigenvalue against a dense eigensolver") {
    const GramSystem s(uniform_nodes(10), 1.0);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s.matrix());
    const double oracle = eig.eigenvalues().minCoeff();
    CHECK(oracle > 0.0);
    CHECK(s.smallest_eigenvalue() == doctest::Approx(oracle).epsilon(1e-6));
    CHECK(s.smallest_pivot() > 0.0);
    CHECK(s.solve_residual(unit(21, 10)) < 1e-12);
}

TEST_CASE("solve is symmetric") {
    for (double lambda : {0.05, 1.0}) {
        const GramSystem s(kadec_nodes(12, 0.2), lambda);
        const CounterRng rng(3);
        for (int t = 0; t < 20; ++t) {
            const auto j = static_cast<std::size_t>(rng.uniform01(2 * t) * 25);
            const auto k = static_cast<std::size_t>(rng.uniform01(2 * t + 1) * 25);
            const double a = s.inverse_column(j)(static_cast<Eigen::Index>(k));
            const double b = s.inverse_column(k)(static_cast<Eigen::Index>(j));
            CHECK(std::abs(a - b) <= 1e-11 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("positive definite across the parameter grid") {
    for (double lambda : {0.05, 0.25, 1.0}) {
        for (int n : {5, 20}) {
            for (const auto& w : {uniform_nodes(n), kadec_nodes(n, 0.2), jittered_nodes(n, 0.2, 7)}) {
                const GramSystem s(w, lambda);
                CHECK(s.smallest_pivot() > 0.0);
                CHECK(s.log2_smallest_eigenvalue() < 0.0);
                CHECK(s.solve_residual(unit(w.size(), w.center())) < 1e-10);
            }
        }
    }
}

TEST_CASE("supported small-lambda envelope") {
    // q sqrt(lambda) = 0.05
    const GramSystem s(uniform_nodes(10), 0.0025);
    CHECK(s.solve_residual(unit(21, 10)) < 1e-10);
    CHECK(s.precision_bits() > 53);
}

TEST_CASE("band cutoff changes entries by at most the cutoff") {
    const GramSystem dense(uniform_nodes(20), 1.0);
    const GramSystem banded(uniform_nodes(20), 1.0, 1e-14);
    CHECK(banded.bandwidth() < dense.bandwidth());
    CHECK(banded.bandwidth() == 5);
    CHECK((dense.matrix() - banded.matrix()).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((dense.inverse_column(20) - banded.inverse_column(20)).cwiseAbs().maxCoeff() < 1e-13);
    // Large lambda underflows to a band even without a cutoff.
    CHECK(GramSystem(uniform_nodes(20), 200.0).bandwidth() == 1);
}

TEST_CASE("inverse decay") {
    const GramSystem s(uniform_nodes(20), 1.0);
    const auto fit = measure_inverse_decay(s);
    CHECK(fit.rate > 0.0);
    CHECK(fit.points >= 4);
    const auto col = s.inverse_column(20);
    for (int j = -20; j <= 20; ++j) {
        const double v = col(20 + j);
        if (std::abs(v) > 1e-13) CHECK(fit.envelope_holds(std::abs(j), v));
    }

    const auto fit10 = measure_inverse_decay(GramSystem(uniform_nodes(10), 1.0));
    CHECK(std::abs(fit10.rate / fit.rate - 1.0) < 0.05);

    CHECK_THROWS_AS((void)measure_inverse_decay(GramSystem(uniform_nodes(20), 50.0)), InsufficientData);
    CHECK_THROWS_AS((void)measure_inverse_decay(GramSystem(uniform_nodes(2), 1.0)), InvalidArgument);
}

TEST_CASE("exponential fit recovers a clean exponential") {
    std::vector<double> d;
    std::vector<double> m;
    for (int i = 0; i < 10; ++i) {
        d.push_back(i);
        m.push_back(3.0 * std::exp(-0.7 * i));
    }
    const auto fit = fit_exponential_decay(d, m, 1e-13);
    CHECK(fit.rate == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(fit.amplitude == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fit.residual < 1e-12);
    const std::vector<double> tiny(10, 1e-20);
    CHECK_THROWS_AS((void)fit_exponential_decay(d, tiny, 1e-13), InsufficientData);
}

TEST_CASE("dumps") {
    const GramSystem s(uniform_nodes(1), 1.0);
    const auto t = matrix_table(s.matrix());
    CHECK(t.header == std::vector<std::string>{"c0", "c1", "c2"});
    CHECK(t.rows.size() == 3);
    const auto c = column_table(s.window(), s.inverse_column(1));
    CHECK(c.header == std::vector<std::string>{"index", "x", "value"});
    CHECK(std::get<std::int64_t>(c.rows[0][0]) == -1);
}
