#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace gaussinterp {

/// sin(pi x), exactly 0 at integers.
[[nodiscard]] double sin_pi(double x);
/// cos(pi x), exactly +-1 at integers.
[[nodiscard]] double cos_pi(double x);

/// sin(pi x)/(pi x) with sinc(0) = 1 and a series branch for |x| < 1e-6.
[[nodiscard]] double sinc(double x);

enum class FunctionKind { sinc, shifted_sinc_combo, fejer_square, trig_spectrum, higgins_g };

/// Evaluable function whose Fourier transform vanishes outside [-pi, pi].
///
/// Cheap to copy; the evaluation closure is shared and immutable.
class BandlimitedFunction {
public:
    using Eval = std::function<double(double)>;

    BandlimitedFunction(FunctionKind kind, std::string id, Eval eval,
                        std::optional<double> l2_norm);

    [[nodiscard]] double operator()(double t) const { return (*eval_)(t); }
    [[nodiscard]] FunctionKind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::string& id() const noexcept { return id_; }
    /// Exact L2 norm over the real line when known in closed form.
    [[nodiscard]] std::optional<double> l2_norm() const noexcept { return l2_norm_; }

    /// factor * f; the result stays in the same space.
    [[nodiscard]] BandlimitedFunction scaled(double factor) const;

private:
    FunctionKind kind_;
    std::string id_;
    std::shared_ptr<const Eval> eval_;
    std::optional<double> l2_norm_;
};

[[nodiscard]] BandlimitedFunction sinc_function();

/// x -> sum_k weights[k] sinc(x - shifts[k]). The norm is known for integer shifts.
[[nodiscard]] BandlimitedFunction pw_combo(std::span<const double> shifts,
                                           std::span<const double> weights);

/// sinc(x/2)^2: triangular spectrum on [-pi, pi], L2 norm sqrt(4/3).
[[nodiscard]] BandlimitedFunction fejer_square();

/// Inverse transform of F(x) = sum_{m=-M}^{M} c_m e^{imx} on [-pi, pi]:
/// f(t) = sum_m c_m sinc(t + m). `coeffs[i]` holds c_{i-M}; size must be odd.
/// The result is real only for real coefficients; complex input with a
/// non-negligible imaginary part is rejected.
[[nodiscard]] BandlimitedFunction trig_spectrum_function(std::span<const std::complex<double>> coeffs);

/// Closed-form generating function for the nodes x_0 = 0, x_{+-j} = +-(j + c^2/j):
/// G(x) = x [cos(pi sqrt(x^2 - 4c^2)) - cos(pi x)] / (2 sinh(pi c)), with cos
/// turning into cosh when x^2 < 4c^2. Its Lagrange-type functions
/// G_l(x) = G(x) / ((x - x_l) G'(x_l)) interpolate the Kronecker delta.
class HigginsG {
public:
    explicit HigginsG(double c);

    [[nodiscard]] double c() const noexcept { return c_; }
    [[nodiscard]] double operator()(double x) const;
    /// Central difference (h = 1e-6) with one Richardson step.
    [[nodiscard]] double derivative(double x) const;
    /// Node x_l of the matching kadec window.
    [[nodiscard]] double node(int l) const;
    /// G_l as an evaluable function; throws DivergentDerivative if |G'(x_l)| < 1e-12.
    [[nodiscard]] BandlimitedFunction fundamental(int l) const;

private:
    double c_;
    double norm_;  // 2 sinh(pi c)
};

/// Composite Simpson approximation of (int_a^b |f - g|^2)^{1/2}.
[[nodiscard]] double l2_error(const std::function<double(double)>& f,
                              const std::function<double(double)>& g, double a, double b,
                              double step);

/// Parses "kind=sinc", "kind=combo;shifts=0,3;weights=3,4", "kind=fejer",
/// "kind=trig;coeffs=0.5,0,0.5" (real c_{-M}..c_M) or "kind=higgins;c=0.2;l=0".
[[nodiscard]] BandlimitedFunction parse_function(std::string_view spec);

}  // namespace gaussinterp
