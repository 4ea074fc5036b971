#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "gaussinterp/bandlimited.hpp"
#include "gaussinterp/errors.hpp"
#include "gaussinterp/nodes.hpp"
#include "gaussinterp/quadrature.hpp"

using namespace gaussinterp;
using cd = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

double squared_norm_quadrature(const BandlimitedFunction& f, double a, double b, double step) {
    const Grid g(a, b, step);
    std::vector<double> v(g.points());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = f(g[k]) * f(g[k]);
    return simpson(v, g.h());
}

// f(t) = (1/2pi) int_{-pi}^{pi} F(x) e^{ixt} dx with F(x) = sum_m c_m e^{imx}, by the
// trapezoid rule in x (F e^{ixt} is smooth; 20000 panels are far beyond 1e-6).
double inversion_quadrature(const std::vector<cd>& c, double t) {
    const int m_half = static_cast<int>(c.size() / 2);
    const int panels = 20000;
    const double h = 2.0 * pi / panels;
    cd sum = 0.0;
    for (int k = 0; k <= panels; ++k) {
        const double x = -pi + k * h;
        cd fx = 0.0;
        for (int m = -m_half; m <= m_half; ++m) fx += c[static_cast<std::size_t>(m + m_half)] * std::exp(cd(0.0, m * x));
        const double w = (k == 0 || k == panels) ? 0.5 : 1.0;
        sum += w * fx * std::exp(cd(0.0, x * t));
    }
    return (sum * h / (2.0 * pi)).real();
}

}  // namespace

TEST_CASE("sinc values") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(sinc(1.0) == 0.0);
    CHECK(sinc(-7.0) == 0.0);
    CHECK(sinc(0.5) == doctest::Approx(2.0 / pi).epsilon(1e-15));
    CHECK(sin_pi(3.0) == 0.0);
    CHECK(cos_pi(3.0) == -1.0);
    CHECK(cos_pi(0.5) == 0.0);
    // The series branch joins the direct formula smoothly.
    for (double x : {9.9e-7, 1.01e-6, 3e-7}) {
        CHECK(sinc(x) == doctest::Approx(std::sin(pi * x) / (pi * x)).epsilon(1e-15));
    }
}

TEST_CASE("pw_combo") {
    const std::vector<double> s0{0.0};
    const std::vector<double> w1{1.0};
    const auto f = pw_combo(s0, w1);
    for (double x : {-2.3, 0.0, 0.4, 5.5}) CHECK(f(x) == sinc(x));
    CHECK(f.l2_norm().value() == 1.0);

    const std::vector<double> s01{0.0, 1.0};
    const std::vector<double> w11{1.0, 1.0};
    CHECK(pw_combo(s01, w11)(0.0) == 1.0);

    const std::vector<double> s03{0.0, 3.0};
    const std::vector<double> w34{3.0, 4.0};
    const auto g = pw_combo(s03, w34);
    CHECK(g.l2_norm().value() == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(std::sqrt(squared_norm_quadrature(g, -200.0, 200.0, 0.01)) == doctest::Approx(5.0).epsilon(2e-3));

    const std::vector<double> half{0.5};
    CHECK_FALSE(pw_combo(half, w1).l2_norm().has_value());
    CHECK_THROWS_AS((void)pw_combo(s03, w1), DimensionMismatch);
}

TEST_CASE("fejer square") {
    const auto f = fejer_square();
    CHECK(f(0.0) == 1.0);
    CHECK(f(2.0) == 0.0);
    CHECK(std::sqrt(squared_norm_quadrature(f, -400.0, 400.0, 0.01)) ==
          doctest::Approx(f.l2_norm().value()).epsilon(1e-5));
}

TEST_CASE("trig spectrum functions") {
    const std::vector<cd> flat{1.0};
    const auto f0 = trig_spectrum_function(flat);
    for (double t : {-1.5, 0.0, 0.3, 4.0}) CHECK(f0(t) == doctest::Approx(sinc(t)).epsilon(1e-15));

    const std::vector<cd> cosine{0.5, 0.0, 0.5};
    const auto f1 = trig_spectrum_function(cosine);
    CHECK(f1(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(f1.l2_norm().value() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));

    const std::vector<cd> c{0.25, -0.5, 1.0, -0.5, 0.25};
    const auto f = trig_spectrum_function(c);
    for (int k = 0; k < 11; ++k) {
        const double t = -5.0 + k;
        CAPTURE(t);
        CHECK(std::abs(f(t) - inversion_quadrature(c, t)) < 1e-6);
        CHECK(std::abs(f(t + 0.37) - inversion_quadrature(c, t + 0.37)) < 1e-6);
    }

    const std::vector<cd> complex_coeffs{cd(0.0, 0.5), 1.0, cd(0.0, -0.5)};
    CHECK_THROWS_AS((void)trig_spectrum_function(complex_coeffs), InvalidArgument);
    const std::vector<cd> even_size{1.0, 1.0};
    CHECK_THROWS_AS((void)trig_spectrum_function(even_size), InvalidArgument);
}

TEST_CASE("trig spectrum functions are linear") {
    const std::vector<cd> a{0.3, -1.0, 2.0};
    const std::vector<cd> b{1.5, 0.25, -0.75};
    std::vector<cd> sum(3);
    for (int i = 0; i < 3; ++i) sum[i] = a[i] + b[i];
    const auto fa = trig_spectrum_function(a);
    const auto fb = trig_spectrum_function(b);
    const auto fs = trig_spectrum_function(sum);
    for (double t = -6.0; t <= 6.0; t += 0.37) CHECK(std::abs(fs(t) - fa(t) - fb(t)) < 1e-12);
}

TEST_CASE("bounded by the L2 norm") {
    const std::vector<double> s{0.0, 3.0, -2.0};
    const std::vector<double> w{3.0, 4.0, -1.0};
    const std::vector<cd> c{0.25, -0.5, 1.0, -0.5, 0.25};
    for (const auto& f : {sinc_function(), pw_combo(s, w), fejer_square(), trig_spectrum_function(c)}) {
        const double bound = f.l2_norm().value() + 1e-9;
        for (double t = -20.0; t <= 20.0; t += 0.01) CHECK(std::abs(f(t)) <= bound);
    }
}

TEST_CASE("higgins closed form") {
    const HigginsG g(0.2);
    CHECK(g(0.0) == 0.0);
    const auto w = kadec_nodes(10, 0.2);
    double worst = 0.0;
    for (double x : w.nodes()) worst = std::max(worst, std::abs(g(x)));
    CHECK(worst < 1e-9);
    // The cosh branch inside |x| < 2c meets the cos branch continuously.
    CHECK(g(0.4 - 1e-9) == doctest::Approx(g(0.4 + 1e-9)).epsilon(1e-6));

    const auto g1 = g.fundamental(1);
    CHECK(g1(w[w.position(1)]) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(g1(w[w.position(2)])) < 1e-9);
    CHECK(g.node(2) == w[w.position(2)]);

    CHECK_THROWS_AS(HigginsG(0.5), InvalidArgument);
    CHECK_THROWS_AS(HigginsG(0.0), InvalidArgument);
}

TEST_CASE("higgins fundamental functions interpolate the delta") {
    for (double c : {0.1, 0.2, 0.3, 0.45}) {
        const HigginsG g(c);
        const auto w = kadec_nodes(10, c);
        for (int l : {-3, 0, 1, 4}) {
            const auto gl = g.fundamental(l);
            double off = 0.0;
            for (int m = -10; m <= 10; ++m) {
                const double v = gl(w[w.position(m)]);
                if (m == l) {
                    CHECK(v == doctest::Approx(1.0).epsilon(1e-8));
                } else {
                    off = std::max(off, std::abs(v));
                }
            }
            CAPTURE(c);
            CAPTURE(l);
            CHECK(off < 1e-8);
        }
    }
}

TEST_CASE("l2_error") {
    const auto f = sinc_function();
    auto zero = [](double) { return 0.0; };
    CHECK(l2_error(f, f, -3.0, 3.0, 0.01) == 0.0);
    CHECK(l2_error(f, zero, -100.0, 100.0, 0.01) == doctest::Approx(1.0).epsilon(2e-2));
    const auto f2 = f.scaled(2.0);
    CHECK(l2_error(f2, zero, -10.0, 10.0, 0.01) == 2.0 * l2_error(f, zero, -10.0, 10.0, 0.01));
    auto bad = [](double) { return std::nan(""); };
    CHECK_THROWS_AS((void)l2_error(f, bad, -1.0, 1.0, 0.1), NonFinite);
}

TEST_CASE("function specs") {
    CHECK(parse_function("sinc").kind() == FunctionKind::sinc);
    CHECK(parse_function("kind=fejer").kind() == FunctionKind::fejer_square);
    const auto combo = parse_function("kind=combo;shifts=0,3;weights=3,4");
    CHECK(combo.kind() == FunctionKind::shifted_sinc_combo);
    CHECK(combo.l2_norm().value() == doctest::Approx(5.0));
    CHECK(parse_function("kind=trig;coeffs=0.5,0,0.5")(1.0) == doctest::Approx(0.5));
    CHECK(parse_function("kind=higgins;c=0.2;l=0")(0.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS((void)parse_function("kind=nope"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_function("kind=combo;shifts=0"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_function("kind=combo;shifts=0,x;weights=1,2"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_function(""), InvalidArgument);
}
