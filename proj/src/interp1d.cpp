#include "gaussinterp/interp1d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gaussinterp/errors.hpp"
#include "gaussinterp/quadrature.hpp"
#include "interp_state.hpp"
#include "mp.hpp"
#include "parallel.hpp"

namespace gaussinterp {

namespace {

GaussianInterpolant build(const GramSystem& system, std::vector<double> data,
                          InterpolantSource source) {
    if (data.size() != system.size()) {
        throw DimensionMismatch("data has length " + std::to_string(data.size()) +
                                ", window has " + std::to_string(system.size()) + " nodes");
    }
    for (std::size_t j = 0; j < data.size(); ++j) {
        if (!std::isfinite(data[j])) {
            throw NonFinite("sample " + std::to_string(j) + " is not finite");
        }
    }
    auto mp = system.factor().solve(data);
    const auto rounded = detail::to_double(mp);
    auto state = std::make_shared<detail::InterpolantState>(detail::InterpolantState{
        .window = system.window(),
        .lambda = system.lambda(),
        .source = source,
        .data = Eigen::Map<const Eigen::VectorXd>(data.data(), static_cast<Eigen::Index>(data.size())),
        .mp_coeffs = std::move(mp),
        .coeffs = Eigen::Map<const Eigen::VectorXd>(rounded.data(),
                                                    static_cast<Eigen::Index>(rounded.size())),
    });
    return GaussianInterpolant(std::move(state));
}

}  // namespace

const NodeWindow& GaussianInterpolant::window() const noexcept { return state_->window; }
double GaussianInterpolant::lambda() const noexcept { return state_->lambda; }
InterpolantSource GaussianInterpolant::source() const noexcept { return state_->source; }
const Eigen::VectorXd& GaussianInterpolant::coeffs() const noexcept { return state_->coeffs; }
const Eigen::VectorXd& GaussianInterpolant::data() const noexcept { return state_->data; }

long GaussianInterpolant::precision_bits() const noexcept {
    return state_->mp_coeffs.empty() ? 0 : state_->mp_coeffs.front().precision();
}

double GaussianInterpolant::operator()(double x) const {
    if (!std::isfinite(x)) throw NonFinite("evaluation point is not finite");
    return detail::GaussSum(state_->window.nodes(), state_->mp_coeffs, state_->lambda)(x);
}

std::vector<double> GaussianInterpolant::evaluate(std::span<const double> xs) const {
    for (double x : xs) {
        if (!std::isfinite(x)) throw NonFinite("evaluation point is not finite");
    }
    const detail::GaussSum sum(state_->window.nodes(), state_->mp_coeffs, state_->lambda);
    std::vector<double> out(xs.size());
    detail::parallel_for(xs.size(), [&](std::size_t i) { out[i] = sum(xs[i]); });
    return out;
}

double GaussianInterpolant::max_node_residual() const {
    const auto values = evaluate(state_->window.nodes());
    double worst = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        worst = std::max(worst, std::abs(values[k] - state_->data(static_cast<Eigen::Index>(k))));
    }
    return worst;
}

GaussianInterpolant interpolate_function(const BandlimitedFunction& f, const GramSystem& system) {
    std::vector<double> data;
    data.reserve(system.size());
    for (double x : system.window().nodes()) data.push_back(f(x));
    return build(system, std::move(data), InterpolantSource::from_function);
}

GaussianInterpolant interpolate_function(const BandlimitedFunction& f, const NodeWindow& window,
                                         double lambda) {
    return interpolate_function(f, GramSystem(window, lambda));
}

GaussianInterpolant interpolate_sequence(std::span<const double> y, const GramSystem& system) {
    return build(system, std::vector<double>(y.begin(), y.end()), InterpolantSource::from_sequence);
}

GaussianInterpolant interpolate_sequence(std::span<const double> y, const NodeWindow& window,
                                         double lambda) {
    if (y.size() != window.size()) {
        throw DimensionMismatch("data has length " + std::to_string(y.size()) + ", window has " +
                                std::to_string(window.size()) + " nodes");
    }
    return interpolate_sequence(y, GramSystem(window, lambda));
}

double evaluate(const GaussianInterpolant& interp, double x) { return interp(x); }

GaussianInterpolant fundamental_function(const GramSystem& system, std::size_t l) {
    if (l >= system.size()) {
        throw IndexOutOfRange("position " + std::to_string(l) + " is outside a window of " +
                              std::to_string(system.size()) + " nodes");
    }
    std::vector<double> e(system.size(), 0.0);
    e[l] = 1.0;
    return build(system, std::move(e), InterpolantSource::from_sequence);
}

GaussianInterpolant fundamental_function(const NodeWindow& window, double lambda, std::size_t l) {
    if (l >= window.size()) {
        throw IndexOutOfRange("position " + std::to_string(l) + " is outside a window of " +
                              std::to_string(window.size()) + " nodes");
    }
    return fundamental_function(GramSystem(window, lambda), l);
}

namespace {

// sum_j a_j e^{-i x_j u} in the interpolant's working precision.
void mp_trig_sum(const detail::InterpolantState& st, double u, detail::MpReal& re,
                 detail::MpReal& im) {
    const mpfr_prec_t bits = re.precision();
    detail::MpReal phase(bits);
    detail::MpReal c(bits);
    detail::MpReal s(bits);
    mpfr_set_zero(re.get(), 1);
    mpfr_set_zero(im.get(), 1);
    const auto x = st.window.nodes();
    for (std::size_t j = 0; j < x.size(); ++j) {
        mpfr_set_d(phase.get(), x[j], MPFR_RNDN);
        mpfr_mul_d(phase.get(), phase.get(), u, MPFR_RNDN);
        mpfr_sin_cos(s.get(), c.get(), phase.get(), MPFR_RNDN);
        mpfr_mul(c.get(), c.get(), st.mp_coeffs[j].get(), MPFR_RNDN);
        mpfr_mul(s.get(), s.get(), st.mp_coeffs[j].get(), MPFR_RNDN);
        mpfr_add(re.get(), re.get(), c.get(), MPFR_RNDN);
        mpfr_sub(im.get(), im.get(), s.get(), MPFR_RNDN);
    }
}

}  // namespace

std::complex<double> InterpolantSpectrum::trig_sum(double u) const {
    if (!std::isfinite(u)) throw NonFinite("frequency is not finite");
    detail::MpReal re(interp_.precision_bits());
    detail::MpReal im(interp_.precision_bits());
    mp_trig_sum(interp_.state(), u, re, im);
    return {re.to_double(), im.to_double()};
}

std::complex<double> InterpolantSpectrum::operator()(double u) const {
    if (!std::isfinite(u)) throw NonFinite("frequency is not finite");
    const mpfr_prec_t bits = interp_.precision_bits();
    const double lambda = interp_.lambda();
    detail::MpReal re(bits);
    detail::MpReal im(bits);
    mp_trig_sum(interp_.state(), u, re, im);
    // sqrt(pi/lambda) e^{-u^2/(4 lambda)}, formed in the same precision because
    // the trigonometric sum can be astronomically large.
    detail::MpReal pref(bits);
    detail::MpReal t(bits);
    mpfr_set_d(pref.get(), u, MPFR_RNDN);
    mpfr_sqr(pref.get(), pref.get(), MPFR_RNDN);
    mpfr_div_d(pref.get(), pref.get(), -4.0 * lambda, MPFR_RNDN);
    mpfr_exp(pref.get(), pref.get(), MPFR_RNDN);
    mpfr_const_pi(t.get(), MPFR_RNDN);
    mpfr_div_d(t.get(), t.get(), lambda, MPFR_RNDN);
    mpfr_sqrt(t.get(), t.get(), MPFR_RNDN);
    mpfr_mul(pref.get(), pref.get(), t.get(), MPFR_RNDN);
    mpfr_mul(re.get(), re.get(), pref.get(), MPFR_RNDN);
    mpfr_mul(im.get(), im.get(), pref.get(), MPFR_RNDN);
    return {re.to_double(), im.to_double()};
}

std::complex<double> spectrum_value(const InterpolantSpectrum& spec, double u) { return spec(u); }

double sequence_norm(std::span<const double> y, NormKind p) {
    double acc = 0.0;
    for (double v : y) {
        switch (p) {
            case NormKind::l1: acc += std::abs(v); break;
            case NormKind::l2: acc += v * v; break;
            case NormKind::linf: acc = std::max(acc, std::abs(v)); break;
        }
    }
    return p == NormKind::l2 ? std::sqrt(acc) : acc;
}

double function_norm(const GaussianInterpolant& interp, NormKind p, double a, double b,
                     double step) {
    const Grid grid(a, b, step);
    std::vector<double> xs(grid.points());
    for (std::size_t k = 0; k < xs.size(); ++k) xs[k] = grid[k];
    auto values = interp.evaluate(xs);
    if (p == NormKind::linf) {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
    for (double& v : values) v = p == NormKind::l1 ? std::abs(v) : v * v;
    const double integral = simpson(values, grid.h());
    return p == NormKind::l1 ? integral : std::sqrt(integral);
}

double lp_norm_ratio(const GramSystem& system, std::span<const double> y, NormKind p) {
    const double denom = sequence_norm(y, p);
    if (y.size() == system.size() && denom == 0.0) throw ZeroData("data vector is zero");
    const auto interp = interpolate_sequence(y, system);
    const auto& w = system.window();
    return function_norm(interp, p, w.front(), w.back(), w.q() / 20.0) / denom;
}

double lp_norm_ratio(const NodeWindow& window, double lambda, std::span<const double> y,
                     NormKind p) {
    if (y.size() != window.size()) {
        throw DimensionMismatch("data has length " + std::to_string(y.size()) + ", window has " +
                                std::to_string(window.size()) + " nodes");
    }
    if (sequence_norm(y, p) == 0.0) throw ZeroData("data vector is zero");
    return lp_norm_ratio(GramSystem(window, lambda), y, p);
}

namespace {

// Per-interval peaks of |L| on [x_l, x_{l + reach}], sampled at step gap/20.
void interval_peaks(const GaussianInterpolant& f, std::size_t l, std::vector<double>& dist,
                    std::vector<double>& peak) {
    const auto& w = f.window();
    const std::size_t reach = std::max<std::size_t>(w.size() / 4, 1);
    const std::size_t last = std::min(w.size() - 1, l + reach);
    const double xl = w[l];
    std::vector<double> xs;
    for (std::size_t m = l; m < last; ++m) {
        for (int s = 0; s < 20; ++s) xs.push_back(w[m] + (w[m + 1] - w[m]) * s / 20.0);
    }
    xs.push_back(w[last]);
    const auto values = f.evaluate(xs);
    for (std::size_t m = l; m < last; ++m) {
        double best = -1.0;
        double where = w[m];
        for (std::size_t s = 0; s <= 20; ++s) {
            const std::size_t k = (m - l) * 20 + s;
            if (std::abs(values[k]) > best) {
                best = std::abs(values[k]);
                where = xs[k];
            }
        }
        dist.push_back(where - xl);
        peak.push_back(best);
    }
}

}  // namespace

DecayFit fundamental_decay(const GaussianInterpolant& fundamental, std::size_t l,
                           double noise_floor) {
    if (l >= fundamental.window().size()) {
        throw IndexOutOfRange("position " + std::to_string(l) + " is outside the window");
    }
    std::vector<double> dist;
    std::vector<double> peak;
    interval_peaks(fundamental, l, dist, peak);
    return fit_exponential_decay(dist, peak, noise_floor);
}

double fundamental_envelope_ratio(const GaussianInterpolant& fundamental, std::size_t l,
                                  const DecayFit& fit) {
    const auto& w = fundamental.window();
    const auto [a, b] = w.central_half();
    const Grid grid(a, b, w.q() / 20.0);
    std::vector<double> xs(grid.points());
    for (std::size_t k = 0; k < xs.size(); ++k) xs[k] = grid[k];
    const auto values = fundamental.evaluate(xs);
    double worst = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double env = 10.0 * fit.amplitude * std::exp(-0.8 * fit.rate * std::abs(xs[k] - w[l]));
        worst = std::max(worst, std::abs(values[k]) / env);
    }
    return worst;
}

Table interpolant_table(const GaussianInterpolant& interp, std::span<const double> xs) {
    Table t;
    t.header = {"x", "value"};
    const auto values = interp.evaluate(xs);
    for (std::size_t i = 0; i < xs.size(); ++i) t.add_row({xs[i], values[i]});
    return t;
}

Table coefficient_table(const GaussianInterpolant& interp) {
    Table t;
    t.header = {"index", "x", "coeff"};
    const auto& w = interp.window();
    for (std::size_t p = 0; p < w.size(); ++p) {
        t.add_row({static_cast<std::int64_t>(p) - static_cast<std::int64_t>(w.center()), w[p],
                   interp.coeffs()(static_cast<Eigen::Index>(p))});
    }
    return t;
}

Table spectrum_table(const InterpolantSpectrum& spec, std::span<const double> us) {
    Table t;
    t.header = {"u", "re", "im"};
    std::vector<std::complex<double>> values(us.size());
    detail::parallel_for(us.size(), [&](std::size_t i) { values[i] = spec(us[i]); });
    for (std::size_t i = 0; i < us.size(); ++i) t.add_row({us[i], values[i].real(), values[i].imag()});
    return t;
}

}  // namespace gaussinterp
