#include "gaussinterp/kernel.hpp"

#include <cmath>
#include <numbers>

#include "gaussinterp/errors.hpp"

namespace gaussinterp {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw InvalidArgument(std::string(what) + " must be positive and finite");
    }
}

}  // namespace

Scale::Scale(double lambda) : lambda_(lambda) { require_positive(lambda, "lambda"); }

double gaussian(double lambda, double x) {
    require_positive(lambda, "lambda");
    if (!std::isfinite(x)) throw NonFinite("gaussian argument is not finite");
    return std::exp(-lambda * (x * x));
}

double gaussian_ft(double lambda, double u) {
    require_positive(lambda, "lambda");
    if (!std::isfinite(u)) throw NonFinite("frequency is not finite");
    return std::sqrt(std::numbers::pi / lambda) * std::exp(-(u * u) / (4.0 * lambda));
}

double kappa(double alpha) {
    require_positive(alpha, "alpha");
    // expm1 keeps 1 - e^{-alpha} accurate for small alpha.
    return 2.0 * std::exp(-alpha) / -std::expm1(-alpha);
}

}  // namespace gaussinterp
