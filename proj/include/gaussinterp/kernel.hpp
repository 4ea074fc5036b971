#pragma once

namespace gaussinterp {

/// Scaling parameter of the Gaussian e^{-lambda x^2}. Always strictly positive.
class Scale {
public:
    explicit Scale(double lambda);
    [[nodiscard]] double value() const noexcept { return lambda_; }

private:
    double lambda_;
};

/// e^{-lambda x^2}. Underflows to exactly 0 once lambda x^2 exceeds ~745.
[[nodiscard]] double gaussian(double lambda, double x);

/// Fourier transform of the Gaussian, sqrt(pi/lambda) e^{-u^2/(4 lambda)}.
[[nodiscard]] double gaussian_ft(double lambda, double u);

/// Tail bound 2e^{-alpha}/(1-e^{-alpha}); dominates sum_{l != 0} e^{-alpha(2|l|-1)^2}.
[[nodiscard]] double kappa(double alpha);

}  // namespace gaussinterp
