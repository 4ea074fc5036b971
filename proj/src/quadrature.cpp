#include "gaussinterp/quadrature.hpp"

#include <cmath>

#include "gaussinterp/errors.hpp"
#include "gaussinterp/io.hpp"

namespace gaussinterp {

Grid::Grid(double a, double b, double step) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw InvalidArgument("grid interval must satisfy a < b, got [" + format_number(a) + ", " +
                              format_number(b) + "]");
    }
    if (!(step > 0.0) || !std::isfinite(step)) throw InvalidArgument("grid step must be positive");
    auto m = static_cast<std::size_t>(std::ceil((b - a) / step - 1e-9));
    if (m < 2) m = 2;
    if (m % 2) ++m;
    m_ = m;
}

double Grid::operator[](std::size_t k) const noexcept {
    const auto m = static_cast<double>(m_);
    const auto kk = static_cast<double>(k);
    return (a_ * (m - kk) + b_ * kk) / m;
}

double simpson(std::span<const double> samples, double h) {
    const std::size_t n = samples.size();
    if (n < 3 || n % 2 == 0) {
        throw InvalidArgument("Simpson's rule needs an odd number (>= 3) of samples");
    }
    double odd = 0.0;
    double even = 0.0;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        (k % 2 ? odd : even) += samples[k];
    }
    return h / 3.0 * (samples.front() + 4.0 * odd + 2.0 * even + samples.back());
}

}  // namespace gaussinterp
