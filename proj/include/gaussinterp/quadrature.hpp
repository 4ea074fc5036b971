#pragma once

#include <cstddef>
#include <span>

namespace gaussinterp {

/// Uniform grid on [a, b] with an even number of intervals of width <= step.
/// Points are computed as (a (M-k) + b k) / M so the midpoint of a symmetric
/// interval is exactly 0.
class Grid {
public:
    Grid(double a, double b, double step);

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] std::size_t intervals() const noexcept { return m_; }
    [[nodiscard]] std::size_t points() const noexcept { return m_ + 1; }
    [[nodiscard]] double h() const noexcept { return (b_ - a_) / static_cast<double>(m_); }
    [[nodiscard]] double operator[](std::size_t k) const noexcept;

private:
    double a_;
    double b_;
    std::size_t m_;
};

/// Composite Simpson rule over samples on a Grid (odd sample count).
[[nodiscard]] double simpson(std::span<const double> samples, double h);

}  // namespace gaussinterp
