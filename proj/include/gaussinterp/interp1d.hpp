#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gaussinterp/bandlimited.hpp"
#include "gaussinterp/gram.hpp"
#include "gaussinterp/io.hpp"
#include "gaussinterp/nodes.hpp"

namespace gaussinterp {

enum class InterpolantSource { from_function, from_sequence };

namespace detail {
struct InterpolantState;
}

/// I(x) = sum_j a_j e^{-lambda (x - x_j)^2} with I(x_k) = data_k.
///
/// The coefficients are held in the Gram system's working precision; coeffs()
/// is only a rounded view. For small lambda the coefficients are huge and
/// alternate in sign, so evaluating from the rounded view would be meaningless.
/// Immutable and cheap to copy.
class GaussianInterpolant {
public:
    [[nodiscard]] const NodeWindow& window() const noexcept;
    [[nodiscard]] double lambda() const noexcept;
    [[nodiscard]] InterpolantSource source() const noexcept;
    [[nodiscard]] const Eigen::VectorXd& coeffs() const noexcept;
    [[nodiscard]] const Eigen::VectorXd& data() const noexcept;
    [[nodiscard]] long precision_bits() const noexcept;

    /// Throws NonFinite for non-finite x.
    [[nodiscard]] double operator()(double x) const;

    /// Point values; parallel over xs, results independent of thread count.
    [[nodiscard]] std::vector<double> evaluate(std::span<const double> xs) const;

    /// max_k |I(x_k) - data_k|.
    [[nodiscard]] double max_node_residual() const;

    [[nodiscard]] const detail::InterpolantState& state() const noexcept { return *state_; }

    explicit GaussianInterpolant(std::shared_ptr<const detail::InterpolantState> state)
        : state_(std::move(state)) {}

private:
    std::shared_ptr<const detail::InterpolantState> state_;
};

[[nodiscard]] GaussianInterpolant interpolate_function(const BandlimitedFunction& f,
                                                       const NodeWindow& window, double lambda);
[[nodiscard]] GaussianInterpolant interpolate_function(const BandlimitedFunction& f,
                                                       const GramSystem& system);

/// Throws DimensionMismatch if y does not match the window.
[[nodiscard]] GaussianInterpolant interpolate_sequence(std::span<const double> y,
                                                       const NodeWindow& window, double lambda);
[[nodiscard]] GaussianInterpolant interpolate_sequence(std::span<const double> y,
                                                       const GramSystem& system);

[[nodiscard]] double evaluate(const GaussianInterpolant& interp, double x);

/// L_l: interpolant of the Kronecker delta at position l.
[[nodiscard]] GaussianInterpolant fundamental_function(const NodeWindow& window, double lambda,
                                                       std::size_t l);
[[nodiscard]] GaussianInterpolant fundamental_function(const GramSystem& system, std::size_t l);

/// Fourier transform of an interpolant:
/// sqrt(pi/lambda) e^{-u^2/(4 lambda)} sum_j a_j e^{-i x_j u}.
class InterpolantSpectrum {
public:
    explicit InterpolantSpectrum(GaussianInterpolant interp) : interp_(std::move(interp)) {}

    [[nodiscard]] const GaussianInterpolant& interpolant() const noexcept { return interp_; }
    [[nodiscard]] std::complex<double> operator()(double u) const;
    /// The trigonometric factor sum_j a_j e^{-i x_j u} on its own.
    [[nodiscard]] std::complex<double> trig_sum(double u) const;

private:
    GaussianInterpolant interp_;
};

[[nodiscard]] std::complex<double> spectrum_value(const InterpolantSpectrum& spec, double u);

enum class NormKind { l1, l2, linf };

[[nodiscard]] double sequence_norm(std::span<const double> y, NormKind p);

/// ||I||_{L_p([a, b])} on a grid of step <= `step`: Simpson for p = 1, 2 and
/// the grid maximum for p = inf.
[[nodiscard]] double function_norm(const GaussianInterpolant& interp, NormKind p, double a,
                                   double b, double step);

/// ||I(y, .)||_{L_p} over the window span (grid step q/20) divided by ||y||_p.
/// Throws ZeroData for y = 0.
[[nodiscard]] double lp_norm_ratio(const NodeWindow& window, double lambda,
                                   std::span<const double> y, NormKind p);
[[nodiscard]] double lp_norm_ratio(const GramSystem& system, std::span<const double> y, NormKind p);

/// Exponential fit of |L_l| from its per-interval peaks on [x_l, x_{l + size/4}].
[[nodiscard]] DecayFit fundamental_decay(const GaussianInterpolant& fundamental, std::size_t l,
                                         double noise_floor = 1e-13);

/// max over the central half-window grid (step q/20) of
/// |L_l(x)| / (10 amplitude e^{-0.8 rate |x - x_l|}); the envelope holds when <= 1.
[[nodiscard]] double fundamental_envelope_ratio(const GaussianInterpolant& fundamental,
                                                std::size_t l, const DecayFit& fit);

// Dumps: (x, value), (index, x, coeff), (u, re, im).
[[nodiscard]] Table interpolant_table(const GaussianInterpolant& interp, std::span<const double> xs);
[[nodiscard]] Table coefficient_table(const GaussianInterpolant& interp);
[[nodiscard]] Table spectrum_table(const InterpolantSpectrum& spec, std::span<const double> us);

}  // namespace gaussinterp
