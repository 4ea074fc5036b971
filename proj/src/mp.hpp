#pragma once

// Multiprecision internals shared by gram, interp1d and interp2d.
//
// The Gaussian Gram matrix has smallest eigenvalue ~ e^{-pi^2/(4 lambda q^2)},
// so for small lambda its solution vector is huge and alternating and only
// cancels back to O(1) in the interpolant. Factorization, solves, and every sum
// over coefficients therefore run in MPFR at a per-system precision.

#include <mpfr.h>

#include <cstddef>
#include <span>
#include <vector>

namespace gaussinterp::detail {

/// Owning MPFR scalar with a precision fixed at construction.
class MpReal {
public:
    explicit MpReal(mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_zero(v_, 1);
    }
    MpReal(double value, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_d(v_, value, MPFR_RNDN);
    }
    MpReal(const MpReal& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    MpReal(MpReal&& other) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, other.v_);
    }
    MpReal& operator=(const MpReal& other) {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }
    MpReal& operator=(MpReal&& other) noexcept {
        mpfr_swap(v_, other.v_);
        return *this;
    }
    ~MpReal() { mpfr_clear(v_); }

    [[nodiscard]] mpfr_ptr get() noexcept { return v_; }
    [[nodiscard]] mpfr_srcptr get() const noexcept { return v_; }
    [[nodiscard]] double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
    [[nodiscard]] mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

private:
    mpfr_t v_;
};

using MpVector = std::vector<MpReal>;

[[nodiscard]] MpVector make_vector(std::size_t n, mpfr_prec_t bits);
[[nodiscard]] MpVector to_mp(std::span<const double> values, mpfr_prec_t bits);
[[nodiscard]] std::vector<double> to_double(const MpVector& values);

/// log2 |v|, or -inf for zero.
[[nodiscard]] double log2_abs(const MpReal& v);

/// e^{-lambda (a - b)^2} at the precision of `out`.
void gaussian_mp(MpReal& out, double lambda, double a, double b);

/// Double value of a Gram entry after the underflow/cutoff rule.
[[nodiscard]] double gram_entry(double lambda, double a, double b, double band_cutoff);

/// Half-bandwidth of the Gram matrix under the same rule.
[[nodiscard]] std::size_t gram_bandwidth(std::span<const double> nodes, double lambda,
                                         double band_cutoff);

/// Lower-triangular banded Cholesky factor of the Gaussian Gram matrix.
///
/// Row j stores columns [j - bw, j]. Entries outside the band are exact zeros
/// of the factored matrix. Read-only after construction, so concurrent solves
/// against one factor are safe.
class BandCholesky {
public:
    /// Entries whose double value is below `band_cutoff` (or underflows) are
    /// exact zeros; nodes must be sorted so those zeros form the band edge.
    /// `ok()` is false when a pivot is not positive.
    BandCholesky(std::span<const double> nodes, double lambda, double band_cutoff,
                 mpfr_prec_t bits);

    [[nodiscard]] bool ok() const noexcept { return ok_; }
    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] std::size_t bandwidth() const noexcept { return bw_; }
    [[nodiscard]] mpfr_prec_t bits() const noexcept { return bits_; }

    /// Smallest squared diagonal of the factor (pivot of the elimination).
    [[nodiscard]] double smallest_pivot() const;

    /// In-place solve of A x = b.
    void solve_in_place(MpVector& b) const;
    [[nodiscard]] MpVector solve(std::span<const double> rhs) const;

    /// A x, using the same (masked) entries that were factored.
    [[nodiscard]] MpVector multiply(const MpVector& x) const;

    /// log2 of the smallest eigenvalue, by inverse iteration.
    [[nodiscard]] double log2_smallest_eigenvalue(int iterations = 40) const;

private:
    [[nodiscard]] std::size_t lo(std::size_t j) const noexcept { return j > bw_ ? j - bw_ : 0; }
    [[nodiscard]] MpReal& l(std::size_t j, std::size_t k) { return factor_[j * (bw_ + 1) + (k + bw_ - j)]; }
    [[nodiscard]] const MpReal& l(std::size_t j, std::size_t k) const {
        return factor_[j * (bw_ + 1) + (k + bw_ - j)];
    }
    [[nodiscard]] const MpReal& a(std::size_t j, std::size_t k) const {
        return entries_[j * (bw_ + 1) + (k + bw_ - j)];
    }

    std::size_t n_;
    std::size_t bw_;
    mpfr_prec_t bits_;
    bool ok_ = true;
    MpVector entries_;  // lower band of A
    MpVector factor_;   // lower band of L
};

/// sum_j coeffs[j] e^{-lambda (x - nodes[j])^2}.
/// Terms below e^{-800} in magnitude are skipped. The referenced nodes and
/// coefficients must outlive the sum.
class GaussSum {
public:
    GaussSum(std::span<const double> nodes, const MpVector& coeffs, double lambda);

    /// Rounded to double.
    [[nodiscard]] double operator()(double x) const;
    /// Left in multiprecision; `out` sets the working precision.
    void evaluate(MpReal& out, double x) const;

private:
    std::span<const double> nodes_;
    const MpVector* coeffs_;
    double lambda_;
    std::vector<double> log_abs_;  // ln |coeff_j|, -inf for zeros
};

}  // namespace gaussinterp::detail
