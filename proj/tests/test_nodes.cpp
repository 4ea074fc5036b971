#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "gaussinterp/errors.hpp"
#include "gaussinterp/nodes.hpp"

using namespace gaussinterp;

namespace {

std::vector<double> as_vector(const NodeWindow& w) { return {w.nodes().begin(), w.nodes().end()}; }

}  // namespace

TEST_CASE("uniform nodes") {
    CHECK(as_vector(uniform_nodes(1)) == std::vector<double>{-1, 0, 1});
    const auto w2 = uniform_nodes(2);
    CHECK(as_vector(w2) == std::vector<double>{-2, -1, 0, 1, 2});
    CHECK(w2.q() == 1.0);
    CHECK(w2.Q() == 1.0);
    const auto w3 = uniform_nodes(3);
    CHECK(w3.size() == 7);
    CHECK(w3[w3.center()] == 0.0);
    CHECK(w3.position(-3) == 0);
    CHECK_THROWS_AS((void)w3.position(4), IndexOutOfRange);
    CHECK_THROWS_AS((void)uniform_nodes(0), InvalidArgument);
}

TEST_CASE("kadec nodes") {
    const auto w1 = kadec_nodes(1, 0.2);
    CHECK(w1[0] == doctest::Approx(-1.04).epsilon(1e-15));
    CHECK(w1[1] == 0.0);
    CHECK(w1[2] == doctest::Approx(1.04).epsilon(1e-15));
    const auto w2 = kadec_nodes(2, 0.2);
    CHECK(w2[w2.position(2)] == doctest::Approx(2.02).epsilon(1e-15));

    for (double c : {-0.45, -0.1, 0.2, 0.3, 0.45}) {
        const auto w = kadec_nodes(20, c);
        double worst = 0.0;
        for (int j = -20; j <= 20; ++j) {
            worst = std::max(worst, std::abs(w[w.position(j)] - j));
            CHECK(w[w.position(-j)] == -w[w.position(j)]);
        }
        CHECK(worst == doctest::Approx(c * c).epsilon(1e-14));
        CHECK(worst < 0.25);
    }
    CHECK(kadec_nodes(5, 0.2).q() == doctest::Approx(0.98).epsilon(1e-14));

    CHECK_THROWS_AS((void)kadec_nodes(5, 0.5), InvalidArgument);
    CHECK_THROWS_AS((void)kadec_nodes(5, -0.7), InvalidArgument);
    CHECK_THROWS_AS((void)kadec_nodes(5, 0.0), InvalidArgument);
}

TEST_CASE("jittered nodes") {
    CHECK(as_vector(jittered_nodes(6, 0.0, 3)) == as_vector(uniform_nodes(6)));
    const auto a = jittered_nodes(10, 0.2, 7);
    const auto b = jittered_nodes(10, 0.2, 7);
    CHECK(a == b);
    CHECK(a.q() >= 0.6);
    CHECK(a.Q() <= 1.4);
    for (int j = -10; j <= 10; ++j) CHECK(std::abs(a[a.position(j)] - j) <= 0.2);
    CHECK(as_vector(jittered_nodes(10, 0.2, 8)) != as_vector(a));
    CHECK_THROWS_AS((void)jittered_nodes(10, 0.5, 7), InvalidArgument);
    CHECK_THROWS_AS((void)jittered_nodes(10, -0.1, 7), InvalidArgument);
}

TEST_CASE("punctured integers") {
    CHECK(as_vector(punctured_integer_nodes(2)) == std::vector<double>{-2, -1, 1, 2});
    const auto w = punctured_integer_nodes(3);
    CHECK(w.size() == 6);
    for (double x : w.nodes()) CHECK(x != 0.0);
    CHECK(w.q() == 1.0);
    CHECK(w.Q() == 2.0);
    CHECK_THROWS_AS((void)punctured_integer_nodes(1), InvalidArgument);
}

TEST_CASE("validate_window") {
    const std::vector<double> ok{0, 1, 3};
    const auto s = validate_window(ok);
    CHECK(s.q == 1.0);
    CHECK(s.Q == 2.0);

    const std::vector<double> dup{0, 0, 1};
    try {
        (void)validate_window(dup);
        FAIL("expected NonIncreasing");
    } catch (const NonIncreasing& e) {
        CHECK(e.index() == 0);
    }
    const std::vector<double> back{0, 2, 1};
    CHECK_THROWS_AS((void)validate_window(back), NonIncreasing);
    const std::vector<double> nan{0, std::numeric_limits<double>::quiet_NaN()};
    CHECK_THROWS_AS((void)validate_window(nan), NonFinite);
}

TEST_CASE("every generator passes validation") {
    for (const auto& w : {uniform_nodes(7), kadec_nodes(7, 0.3), jittered_nodes(7, 0.45, 1),
                          punctured_integer_nodes(7)}) {
        const auto s = validate_window(w.nodes());
        CHECK(s.q > 0.0);
        CHECK(s.q == w.q());
        CHECK(s.Q == w.Q());
    }
}

TEST_CASE("make_window dispatches on family") {
    CHECK(make_window(Family::kadec, {.n = 4, .c = 0.3}) == kadec_nodes(4, 0.3));
    CHECK(make_window(Family::jittered, {.n = 4, .delta = 0.1, .seed = 2}) == jittered_nodes(4, 0.1, 2));
    CHECK_THROWS_AS((void)make_window(Family::explicit_nodes, {.n = 4}), InvalidArgument);
}

TEST_CASE("riesz bounds: uniform windows are orthonormal") {
    for (int n : {1, 5, 20, 100}) {
        const auto b = riesz_bounds_estimate(uniform_nodes(n));
        CHECK(std::abs(b.lower - 1.0) < 1e-12);
        CHECK(std::abs(b.upper - 1.0) < 1e-12);
    }
}

TEST_CASE("riesz bounds: two nodes at distance 1/2") {
    const auto b = riesz_bounds_estimate(explicit_nodes({0.0, 0.5}));
    CHECK(b.lower == doctest::Approx(1.0 - 2.0 / std::numbers::pi).epsilon(1e-13));
    CHECK(b.upper == doctest::Approx(1.0 + 2.0 / std::numbers::pi).epsilon(1e-13));
}

TEST_CASE("riesz bounds: kadec windows stay bounded away from zero") {
    const auto b20 = riesz_bounds_estimate(kadec_nodes(20, 0.2));
    CHECK(b20.lower > 0.5);
    double prev = std::numeric_limits<double>::infinity();
    for (int n : {5, 10, 20, 40}) {
        const double lo = riesz_bounds_estimate(kadec_nodes(n, 0.2)).lower;
        CHECK(lo - prev <= 1e-9);
        prev = lo;
    }
    CHECK(prev > 0.1);
}

TEST_CASE("window serialization round trips") {
    for (const auto& w : {uniform_nodes(3), kadec_nodes(3, 0.2), jittered_nodes(3, 0.2, 99),
                          punctured_integer_nodes(3), explicit_nodes({-0.5, 0.25, 2.0})}) {
        CHECK(window_from_json(window_to_json(w)) == w);
        const auto back = window_from_csv(window_to_csv(w));
        CHECK(as_vector(back) == as_vector(w));
        CHECK(back.family() == Family::explicit_nodes);
    }
    CHECK_THROWS_AS((void)window_from_json("{\"nodes\": [0, 0]}"), NonIncreasing);
    CHECK_THROWS_AS((void)window_from_json("{\"nodes\": [\"a\"]}"), InvalidArgument);
    CHECK_THROWS_AS((void)window_from_json("not json"), InvalidArgument);
    CHECK_THROWS_AS((void)window_from_csv("x\n1\nabc\n"), InvalidArgument);
}

TEST_CASE("descriptor and central half") {
    const auto w = kadec_nodes(4, 0.2);
    CHECK(w.descriptor() == "kadec(n=4,c=0.2)");
    const auto [a, b] = uniform_nodes(40).central_half();
    CHECK(a == -20.0);
    CHECK(b == 20.0);
}
