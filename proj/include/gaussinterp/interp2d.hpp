#pragma once

#include <memory>
#include <span>

#include <Eigen/Dense>

#include "gaussinterp/gram.hpp"
#include "gaussinterp/io.hpp"
#include "gaussinterp/nodes.hpp"

namespace gaussinterp {

namespace detail {
struct GridState;
}

/// Tensor-product Gaussian interpolant on the grid (x_l, y_k):
/// I(x, y) = sum_{j,m} C(j,m) e^{-lambda (x - x_j)^2} e^{-lambda (y - y_m)^2}.
///
/// The grid Gram matrix is the Kronecker product of the axis Gram matrices, so
/// C = A_x^{-1} D A_y^{-1}. Only grids are supported, and only in two dimensions.
class GridInterpolant2D {
public:
    [[nodiscard]] const NodeWindow& window_x() const noexcept;
    [[nodiscard]] const NodeWindow& window_y() const noexcept;
    [[nodiscard]] double lambda() const noexcept;
    /// Rounded view of the multiprecision coefficients; rows follow x, columns y.
    [[nodiscard]] const Eigen::MatrixXd& coeff_matrix() const noexcept;
    [[nodiscard]] const Eigen::MatrixXd& data() const noexcept;
    [[nodiscard]] long precision_bits() const noexcept;

    [[nodiscard]] double operator()(double x, double y) const;

    /// values(i, k) = I(xs[i], ys[k]) via two matrix contractions; rows run in parallel.
    [[nodiscard]] Eigen::MatrixXd evaluate_grid(std::span<const double> xs,
                                                std::span<const double> ys) const;

    /// max over grid nodes of |I(x_l, y_k) - data(l, k)|.
    [[nodiscard]] double max_grid_residual() const;

    explicit GridInterpolant2D(std::shared_ptr<const detail::GridState> state)
        : state_(std::move(state)) {}

private:
    std::shared_ptr<const detail::GridState> state_;
};

/// Throws DimensionMismatch if data is not |wx| x |wy|; propagates
/// FactorizationFailure from either axis.
[[nodiscard]] GridInterpolant2D interpolate_grid(const Eigen::MatrixXd& data, const NodeWindow& wx,
                                                 const NodeWindow& wy, double lambda);

[[nodiscard]] double evaluate2d(const GridInterpolant2D& interp, double x, double y);

/// Precision (bits) that makes the two axis solves as accurate as a direct solve
/// of the Kronecker system.
[[nodiscard]] long tensor_precision_bits(const GramSystem& gx, const GramSystem& gy);

// Dumps: (x, y, value) triples and the coefficient matrix.
[[nodiscard]] Table grid_values_table(const GridInterpolant2D& interp, std::span<const double> xs,
                                      std::span<const double> ys);
[[nodiscard]] Table grid_coefficient_table(const GridInterpolant2D& interp);

}  // namespace gaussinterp
