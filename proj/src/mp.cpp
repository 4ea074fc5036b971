#include "mp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace gaussinterp::detail {

MpVector make_vector(std::size_t n, mpfr_prec_t bits) {
    MpVector v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(bits);
    return v;
}

MpVector to_mp(std::span<const double> values, mpfr_prec_t bits) {
    MpVector v;
    v.reserve(values.size());
    for (double x : values) v.emplace_back(x, bits);
    return v;
}

std::vector<double> to_double(const MpVector& values) {
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.to_double());
    return out;
}

double log2_abs(const MpReal& v) {
    if (mpfr_zero_p(v.get())) return -std::numeric_limits<double>::infinity();
    long exp = 0;
    const double mant = mpfr_get_d_2exp(&exp, v.get(), MPFR_RNDN);
    return std::log2(std::abs(mant)) + static_cast<double>(exp);
}

void gaussian_mp(MpReal& out, double lambda, double a, double b) {
    mpfr_set_d(out.get(), a, MPFR_RNDN);
    mpfr_sub_d(out.get(), out.get(), b, MPFR_RNDN);
    mpfr_sqr(out.get(), out.get(), MPFR_RNDN);
    mpfr_mul_d(out.get(), out.get(), -lambda, MPFR_RNDN);
    mpfr_exp(out.get(), out.get(), MPFR_RNDN);
}

double gram_entry(double lambda, double a, double b, double band_cutoff) {
    const double d = a - b;
    const double v = std::exp(-lambda * (d * d));
    return v < band_cutoff ? 0.0 : v;
}

std::size_t gram_bandwidth(std::span<const double> nodes, double lambda, double band_cutoff) {
    std::size_t bw = 0;
    std::size_t first = 0;  // first nonzero column of the current row; non-decreasing in j
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        while (first < j && gram_entry(lambda, nodes[j], nodes[first], band_cutoff) == 0.0) ++first;
        bw = std::max(bw, j - first);
    }
    return bw;
}

BandCholesky::BandCholesky(std::span<const double> nodes, double lambda, double band_cutoff,
                           mpfr_prec_t bits)
    : n_(nodes.size()),
      bw_(gram_bandwidth(nodes, lambda, band_cutoff)),
      bits_(bits),
      entries_(make_vector(n_ * (bw_ + 1), bits)),
      factor_(make_vector(n_ * (bw_ + 1), bits)) {
    for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t k = lo(j); k <= j; ++k) {
            if (gram_entry(lambda, nodes[j], nodes[k], band_cutoff) == 0.0) continue;
            gaussian_mp(entries_[j * (bw_ + 1) + (k + bw_ - j)], lambda, nodes[j], nodes[k]);
        }
    }

    MpReal s(bits);
    MpReal t(bits);
    for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t k = lo(j); k <= j; ++k) {
            mpfr_set(s.get(), a(j, k).get(), MPFR_RNDN);
            for (std::size_t i = std::max(lo(j), lo(k)); i < k; ++i) {
                mpfr_mul(t.get(), l(j, i).get(), l(k, i).get(), MPFR_RNDN);
                mpfr_sub(s.get(), s.get(), t.get(), MPFR_RNDN);
            }
            if (k < j) {
                mpfr_div(l(j, k).get(), s.get(), l(k, k).get(), MPFR_RNDN);
            } else {
                if (mpfr_sgn(s.get()) <= 0) {
                    ok_ = false;
                    return;
                }
                mpfr_sqrt(l(j, j).get(), s.get(), MPFR_RNDN);
            }
        }
    }
}

double BandCholesky::smallest_pivot() const {
    double best = std::numeric_limits<double>::infinity();
    MpReal sq(bits_);
    for (std::size_t j = 0; j < n_; ++j) {
        mpfr_sqr(sq.get(), l(j, j).get(), MPFR_RNDN);
        best = std::min(best, sq.to_double());
    }
    return best;
}

void BandCholesky::solve_in_place(MpVector& b) const {
    MpReal t(bits_);
    for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t k = lo(j); k < j; ++k) {
            mpfr_mul(t.get(), l(j, k).get(), b[k].get(), MPFR_RNDN);
            mpfr_sub(b[j].get(), b[j].get(), t.get(), MPFR_RNDN);
        }
        mpfr_div(b[j].get(), b[j].get(), l(j, j).get(), MPFR_RNDN);
    }
    for (std::size_t jj = n_; jj-- > 0;) {
        const std::size_t hi = std::min(n_ - 1, jj + bw_);
        for (std::size_t i = jj + 1; i <= hi; ++i) {
            mpfr_mul(t.get(), l(i, jj).get(), b[i].get(), MPFR_RNDN);
            mpfr_sub(b[jj].get(), b[jj].get(), t.get(), MPFR_RNDN);
        }
        mpfr_div(b[jj].get(), b[jj].get(), l(jj, jj).get(), MPFR_RNDN);
    }
}

MpVector BandCholesky::solve(std::span<const double> rhs) const {
    MpVector x = to_mp(rhs, bits_);
    solve_in_place(x);
    return x;
}

MpVector BandCholesky::multiply(const MpVector& x) const {
    MpVector y = make_vector(n_, bits_);
    MpReal t(bits_);
    for (std::size_t j = 0; j < n_; ++j) {
        const std::size_t hi = std::min(n_ - 1, j + bw_);
        for (std::size_t k = lo(j); k <= hi; ++k) {
            const MpReal& ajk = k <= j ? a(j, k) : a(k, j);
            mpfr_mul(t.get(), ajk.get(), x[k].get(), MPFR_RNDN);
            mpfr_add(y[j].get(), y[j].get(), t.get(), MPFR_RNDN);
        }
    }
    return y;
}

double BandCholesky::log2_smallest_eigenvalue(int iterations) const {
    // Start close to the alternating vector, where the smallest eigenvectors of
    // Gaussian Gram matrices concentrate.
    MpVector v = make_vector(n_, bits_);
    for (std::size_t j = 0; j < n_; ++j) {
        const double sign = j % 2 ? -1.0 : 1.0;
        mpfr_set_d(v[j].get(), sign * (1.0 + 0.1 * static_cast<double>(j % 7)), MPFR_RNDN);
    }
    MpReal norm(bits_);
    MpReal t(bits_);
    auto normalize = [&](MpVector& w) {
        mpfr_set_zero(norm.get(), 1);
        for (const auto& wi : w) {
            mpfr_sqr(t.get(), wi.get(), MPFR_RNDN);
            mpfr_add(norm.get(), norm.get(), t.get(), MPFR_RNDN);
        }
        mpfr_sqrt(norm.get(), norm.get(), MPFR_RNDN);
        for (auto& wi : w) mpfr_div(wi.get(), wi.get(), norm.get(), MPFR_RNDN);
    };
    normalize(v);
    double estimate = 0.0;
    for (int it = 0; it < iterations; ++it) {
        solve_in_place(v);
        normalize(v);
        // |A^{-1} v| for a unit v bounds 1 / lambda_min from below.
        estimate = -log2_abs(norm);
    }
    return estimate;
}

GaussSum::GaussSum(std::span<const double> nodes, const MpVector& coeffs, double lambda)
    : nodes_(nodes), coeffs_(&coeffs), lambda_(lambda) {
    log_abs_.reserve(coeffs.size());
    for (const auto& c : coeffs) log_abs_.push_back(log2_abs(c) * std::numbers::ln2);
}

void GaussSum::evaluate(MpReal& out, double x) const {
    const mpfr_prec_t bits = out.precision();
    MpReal g(bits);
    MpReal t(bits);
    mpfr_set_zero(out.get(), 1);
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
        const double d = x - nodes_[j];
        if (lambda_ * d * d - log_abs_[j] > 800.0) continue;
        gaussian_mp(g, lambda_, x, nodes_[j]);
        mpfr_mul(t.get(), g.get(), (*coeffs_)[j].get(), MPFR_RNDN);
        mpfr_add(out.get(), out.get(), t.get(), MPFR_RNDN);
    }
}

double GaussSum::operator()(double x) const {
    MpReal out(coeffs_->empty() ? 128 : coeffs_->front().precision());
    evaluate(out, x);
    return out.to_double();
}

}  // namespace gaussinterp::detail
