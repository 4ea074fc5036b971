#include "gaussinterp/gram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gaussinterp/errors.hpp"
#include "gaussinterp/kernel.hpp"
#include "mp.hpp"

namespace gaussinterp {

namespace {

constexpr double kGuardBits = 96.0;

// Spectral heuristic: with mean spacing h the symbol of the Gram matrix bottoms
// out near e^{-pi^2/(4 lambda h^2)}; an isolated close pair adds ~lambda q^2.
long initial_bits(const NodeWindow& w, double lambda) {
    const double n = static_cast<double>(w.size());
    const double h = w.size() > 1 ? (w.back() - w.front()) / (n - 1.0) : 1.0;
    double bits = 128.0 + std::numbers::pi * std::numbers::pi / (4.0 * lambda * h * h) / std::numbers::ln2;
    const double pair = lambda * w.q() * w.q();
    if (pair < 1.0) bits += -2.0 * std::log2(pair);
    return static_cast<long>(std::min<double>(std::ceil(bits), GramSystem::kMaxPrecisionBits));
}

}  // namespace

GramSystem::GramSystem(NodeWindow window, double lambda, double band_cutoff,
                       long min_precision_bits)
    : window_(std::move(window)), lambda_(Scale(lambda).value()), band_cutoff_(band_cutoff) {
    if (!(band_cutoff >= 0.0) || !std::isfinite(band_cutoff)) {
        throw InvalidArgument("band_cutoff must be a finite nonnegative number");
    }
    const auto x = window_.nodes();
    const auto n = static_cast<Eigen::Index>(x.size());
    matrix_.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k <= j; ++k) {
            matrix_(j, k) = matrix_(k, j) = detail::gram_entry(lambda_, x[j], x[k], band_cutoff_);
        }
    }
    const double norm_inf = matrix_.cwiseAbs().rowwise().sum().maxCoeff();
    log2_norm_ = std::log2(norm_inf);

    long bits = std::clamp(std::max(initial_bits(window_, lambda_), min_precision_bits), 64L,
                           kMaxPrecisionBits);
    while (true) {
        auto factor = std::make_shared<const detail::BandCholesky>(x, lambda_, band_cutoff_, bits);
        long next = 0;
        if (!factor->ok()) {
            next = bits + std::max<long>(64, bits);
        } else {
            const double log2_min = factor->log2_smallest_eigenvalue();
            const double need = kGuardBits + log2_norm_ - log2_min;
            if (static_cast<double>(bits) >= need) {
                factor_ = std::move(factor);
                log2_min_eig_ = log2_min;
                return;
            }
            next = static_cast<long>(std::ceil(need)) + 32;
        }
        if (bits >= kMaxPrecisionBits) {
            throw FactorizationFailure("Gram matrix is not numerically positive definite at " +
                                       std::to_string(bits) + " bits (lambda = " +
                                       format_number(lambda_) + ", q = " +
                                       format_number(window_.q()) + ")");
        }
        bits = std::min(next, kMaxPrecisionBits);
    }
}

GramSystem assemble(const NodeWindow& window, double lambda, double band_cutoff) {
    return GramSystem(window, lambda, band_cutoff);
}

std::size_t GramSystem::bandwidth() const noexcept { return factor_->bandwidth(); }

long GramSystem::precision_bits() const noexcept { return factor_->bits(); }

double GramSystem::smallest_eigenvalue() const noexcept { return std::exp2(log2_min_eig_); }

double GramSystem::smallest_pivot() const { return factor_->smallest_pivot(); }

namespace {

void check_length(std::size_t got, std::size_t want) {
    if (got != want) {
        throw DimensionMismatch("right-hand side has length " + std::to_string(got) +
                                ", system has size " + std::to_string(want));
    }
}

}  // namespace

Eigen::VectorXd GramSystem::solve(std::span<const double> rhs) const {
    check_length(rhs.size(), size());
    const auto a = detail::to_double(factor_->solve(rhs));
    return Eigen::Map<const Eigen::VectorXd>(a.data(), static_cast<Eigen::Index>(a.size()));
}

double GramSystem::solve_residual(std::span<const double> rhs) const {
    check_length(rhs.size(), size());
    const auto a = factor_->solve(rhs);
    auto r = factor_->multiply(a);
    double worst = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) {
        mpfr_sub_d(r[j].get(), r[j].get(), rhs[j], MPFR_RNDN);
        worst = std::max(worst, std::abs(r[j].to_double()));
    }
    return worst;
}

Eigen::VectorXd GramSystem::inverse_column(std::size_t l) const {
    if (l >= size()) {
        throw IndexOutOfRange("column " + std::to_string(l) + " of a system of size " +
                              std::to_string(size()));
    }
    std::vector<double> e(size(), 0.0);
    e[l] = 1.0;
    return solve(e);
}

bool DecayFit::envelope_holds(double distance, double magnitude, double amplitude_slack,
                              double rate_slack) const noexcept {
    return std::abs(magnitude) <= amplitude_slack * amplitude * std::exp(-rate_slack * rate * distance);
}

DecayFit fit_exponential_decay(std::span<const double> distance, std::span<const double> magnitude,
                               double noise_floor, std::size_t min_points) {
    if (distance.size() != magnitude.size()) {
        throw DimensionMismatch("decay fit needs one magnitude per distance");
    }
    std::vector<double> t;
    std::vector<double> y;
    for (std::size_t i = 0; i < distance.size(); ++i) {
        const double m = std::abs(magnitude[i]);
        if (m > noise_floor && std::isfinite(m)) {
            t.push_back(distance[i]);
            y.push_back(std::log(m));
        }
    }
    if (t.size() < std::max<std::size_t>(min_points, 2)) {
        throw InsufficientData(std::to_string(t.size()) + " samples above the noise floor " +
                               format_number(noise_floor) + ", need " + std::to_string(min_points));
    }
    const auto count = static_cast<double>(t.size());
    double mt = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        mt += t[i];
        my += y[i];
    }
    mt /= count;
    my /= count;
    double stt = 0.0;
    double sty = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        stt += (t[i] - mt) * (t[i] - mt);
        sty += (t[i] - mt) * (y[i] - my);
    }
    if (stt == 0.0) throw InsufficientData("decay fit needs at least two distinct distances");
    const double slope = sty / stt;
    const double intercept = my - slope * mt;
    double sq = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double r = y[i] - (intercept + slope * t[i]);
        sq += r * r;
    }
    return {.amplitude = std::exp(intercept),
            .rate = -slope,
            .residual = std::sqrt(sq / count),
            .noise_floor = noise_floor,
            .points = t.size()};
}

DecayFit measure_inverse_decay(const GramSystem& system, double noise_floor) {
    const std::size_t n = system.size();
    if (n < 7) throw InvalidArgument("decay measurement needs a window of at least 7 nodes");
    const std::size_t c = system.window().center();
    const Eigen::VectorXd col = system.inverse_column(c);
    const std::size_t reach = n / 4;
    std::vector<double> dist;
    std::vector<double> mag;
    for (std::size_t pos = c - std::min(c, reach); pos <= std::min(n - 1, c + reach); ++pos) {
        dist.push_back(std::abs(static_cast<double>(pos) - static_cast<double>(c)));
        mag.push_back(col(static_cast<Eigen::Index>(pos)));
    }
    return fit_exponential_decay(dist, mag, noise_floor);
}

Table matrix_table(const Eigen::MatrixXd& m) {
    Table t;
    for (Eigen::Index k = 0; k < m.cols(); ++k) t.header.push_back("c" + std::to_string(k));
    for (Eigen::Index j = 0; j < m.rows(); ++j) {
        std::vector<Cell> row;
        row.reserve(static_cast<std::size_t>(m.cols()));
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.emplace_back(m(j, k));
        t.add_row(std::move(row));
    }
    return t;
}

Table column_table(const NodeWindow& window, const Eigen::VectorXd& column) {
    if (static_cast<std::size_t>(column.size()) != window.size()) {
        throw DimensionMismatch("column length does not match the window");
    }
    Table t;
    t.header = {"index", "x", "value"};
    for (std::size_t p = 0; p < window.size(); ++p) {
        t.add_row({static_cast<std::int64_t>(p) - static_cast<std::int64_t>(window.center()),
                   window[p], column(static_cast<Eigen::Index>(p))});
    }
    return t;
}

}  // namespace gaussinterp
