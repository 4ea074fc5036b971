#pragma once

#include <cstddef>
#include <memory>
#include <span>

#include <Eigen/Dense>

#include "gaussinterp/io.hpp"
#include "gaussinterp/nodes.hpp"

namespace gaussinterp {

namespace detail {
class BandCholesky;
}

/// Symmetric positive-definite Gaussian Gram matrix A(j,k) = e^{-lambda (x_j - x_k)^2}
/// together with its Cholesky factorization.
///
/// The factorization is carried out in multiprecision; the working precision is
/// chosen per system from a spacing heuristic and then confirmed against an
/// inverse-iteration estimate of the smallest eigenvalue, so that the solution
/// keeps at least ~96 correct bits. Entries that underflow in double (or fall
/// below `band_cutoff`) are exact zeros, which makes the matrix banded for
/// large lambda. Immutable after construction; concurrent solves are safe.
class GramSystem {
public:
    /// Throws FactorizationFailure if positive definiteness cannot be confirmed
    /// at up to kMaxPrecisionBits bits. `min_precision_bits` raises the floor of
    /// the working precision (tensor-product solves need the sum of both axes).
    GramSystem(NodeWindow window, double lambda, double band_cutoff = 0.0,
               long min_precision_bits = 0);

    static constexpr long kMaxPrecisionBits = 16384;

    [[nodiscard]] const NodeWindow& window() const noexcept { return window_; }
    [[nodiscard]] double lambda() const noexcept { return lambda_; }
    [[nodiscard]] double band_cutoff() const noexcept { return band_cutoff_; }
    [[nodiscard]] std::size_t size() const noexcept { return window_.size(); }

    /// The matrix rounded to double, with the same exact zeros as the factor.
    [[nodiscard]] const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
    [[nodiscard]] std::size_t bandwidth() const noexcept;
    [[nodiscard]] long precision_bits() const noexcept;

    /// log2 of the infinity norm of the matrix.
    [[nodiscard]] double log2_norm() const noexcept { return log2_norm_; }
    /// Inverse-iteration estimate of the smallest eigenvalue (log2 never underflows).
    [[nodiscard]] double log2_smallest_eigenvalue() const noexcept { return log2_min_eig_; }
    [[nodiscard]] double smallest_eigenvalue() const noexcept;
    /// Smallest Cholesky pivot L(j,j)^2.
    [[nodiscard]] double smallest_pivot() const;

    /// Unique solution of A a = rhs, rounded to double.
    [[nodiscard]] Eigen::VectorXd solve(std::span<const double> rhs) const;

    /// max_j |(A a - rhs)_j| for the multiprecision solution, evaluated exactly
    /// enough to be meaningful even when a is huge.
    [[nodiscard]] double solve_residual(std::span<const double> rhs) const;

    /// Column l (a position) of A^{-1}.
    [[nodiscard]] Eigen::VectorXd inverse_column(std::size_t l) const;

    [[nodiscard]] const detail::BandCholesky& factor() const noexcept { return *factor_; }

private:
    NodeWindow window_;
    double lambda_;
    double band_cutoff_;
    Eigen::MatrixXd matrix_;
    std::shared_ptr<const detail::BandCholesky> factor_;
    double log2_min_eig_ = 0.0;
    double log2_norm_ = 0.0;
};

[[nodiscard]] GramSystem assemble(const NodeWindow& window, double lambda,
                                  double band_cutoff = 0.0);

/// Least-squares fit log|v| ~ log(amplitude) - rate * distance.
struct DecayFit {
    double amplitude = 0.0;
    double rate = 0.0;
    double residual = 0.0;  // RMS of the fit in natural-log units
    double noise_floor = 0.0;
    std::size_t points = 0;

    /// |value| <= amplitude_slack * amplitude * e^{-rate_slack * rate * distance}
    [[nodiscard]] bool envelope_holds(double distance, double magnitude,
                                      double amplitude_slack = 10.0,
                                      double rate_slack = 0.8) const noexcept;
};

/// Fits only the samples with magnitude above `noise_floor`; throws
/// InsufficientData with fewer than `min_points` of them.
[[nodiscard]] DecayFit fit_exponential_decay(std::span<const double> distance,
                                             std::span<const double> magnitude,
                                             double noise_floor, std::size_t min_points = 4);

/// Decay of the central column A^{-1}(., c) over the central half of the indices.
[[nodiscard]] DecayFit measure_inverse_decay(const GramSystem& system, double noise_floor = 1e-13);

/// Row-major dense dumps (17 significant digits).
[[nodiscard]] Table matrix_table(const Eigen::MatrixXd& m);
[[nodiscard]] Table column_table(const NodeWindow& window, const Eigen::VectorXd& column);

}  // namespace gaussinterp
