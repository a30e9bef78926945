#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "winsamp/bounds.hpp"
#include "winsamp/signal_bank.hpp"

using namespace winsamp;

TEST_CASE("axis signal point values") {
    const AxisSignal s1 = AxisSignal::sinc_power(1);
    CHECK(s1(0.0) == 1.0);
    CHECK(std::abs(s1(3.0)) < 1e-15);
    CHECK(s1(0.5) == doctest::Approx(2.0 / kPi).epsilon(1e-15));

    const AxisSignal s2 = AxisSignal::sinc_power(2);
    CHECK(s2(0.0) == 1.0);
    CHECK(s2(1.0) == doctest::Approx(std::pow(sinc(0.5), 2)).epsilon(1e-15));
    CHECK(std::abs(s2(2.0)) < 1e-15);
    CHECK(s2(5.0) >= 0.0); // even power

    const AxisSignal combo = AxisSignal::sinc_combo({2.0, -0.5}, {0.0, 3.0});
    CHECK(combo(0.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(combo(3.0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(combo(7.0) == doctest::Approx(0.0).epsilon(1e-15)); // integer shifts, integer x

    CHECK_THROWS_AS(AxisSignal::sinc_power(0), std::invalid_argument);
    CHECK_THROWS_AS(AxisSignal::sinc_combo({1.0}, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("L^2 norm of sinc is 1 (Parseval)") {
    const Signal f = make_sinc_power(1);
    const NormEstimate est = lq_norm(f, 2.0);
    CHECK(est.value() == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(est.upper() >= est.value());
    CHECK(est.upper() == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("norm is translation invariant and absolutely homogeneous") {
    QuadratureSpec quad;
    quad.radius = 4096.0;
    const double base = lq_norm(make_sinc_combo({1.0}, {0.0}), 2.0, quad).value();
    const double shifted = lq_norm(make_sinc_combo({1.0}, {17.0}), 2.0, quad).value();
    CHECK(shifted == doctest::Approx(base).epsilon(1e-6));
    const double scaled = lq_norm(make_sinc_combo({3.0}, {0.0}), 2.0, quad).value();
    CHECK(scaled == doctest::Approx(3.0 * base).epsilon(1e-12));
}

TEST_CASE("L^q membership gate") {
    CHECK(make_sinc_power(1).in_lq(2.0));
    CHECK_FALSE(make_sinc_power(1).in_lq(1.0)); // sinc is not absolutely integrable
    CHECK(make_sinc_power(2).in_lq(1.0));
    CHECK_THROWS_AS(lq_norm(make_sinc_power(1), 1.0), std::domain_error);
    CHECK_THROWS_AS(make_signal("sinc_power", {1.0}, 1.0), std::domain_error);
    CHECK_NOTHROW(make_signal("sinc_power", {2.0}, 1.0));
}

TEST_CASE("tensor products") {
    const Signal f = make_signal("tensor_product", {1.0, 2.0});
    REQUIRE(f.dimension() == 2);
    const AxisSignal a = AxisSignal::sinc_power(1);
    const AxisSignal b = AxisSignal::sinc_power(2);
    for (double x : {-1.3, 0.0, 0.4, 2.7})
        for (double y : {-0.9, 0.25, 3.1})
            CHECK(f({x, y}) == doctest::Approx(a(x) * b(y)).epsilon(1e-15));

    QuadratureSpec quad;
    quad.radius = 2048.0;
    const double nx = lq_norm(Signal({a}), 2.0, quad).value();
    const double ny = lq_norm(Signal({b}), 2.0, quad).value();
    CHECK(lq_norm(f, 2.0, quad).value() == doctest::Approx(nx * ny).epsilon(1e-10));

    const auto type = f.exponential_type();
    REQUIRE(type.size() == 2);
    CHECK(type[0] == kPi);
    CHECK(type[1] == kPi);
}

TEST_CASE("make_signal argument validation") {
    CHECK_THROWS_AS(make_signal("unknown", {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_signal("sinc_power", {}), std::invalid_argument);
    CHECK_THROWS_AS(make_signal("shifted_sinc_combo", {1.0, 0.0, 2.0}), std::invalid_argument);
    const Signal f = make_signal("shifted_sinc_combo", {1.0, 0.0, -0.25, 2.0});
    CHECK(f(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f(2.0) == doctest::Approx(-0.25).epsilon(1e-15));
}

TEST_CASE("norm estimate structure") {
    const NormEstimate est = lq_norm(make_sinc_power(2), 2.0);
    CHECK(est.quadrature > 0.0);
    CHECK(est.tail_bound > 0.0);
    CHECK(est.error_estimate >= est.tail_bound);
    CHECK(est.upper() > est.value());
    // tail shrinks as the truncation radius grows
    QuadratureSpec small;
    small.radius = 256.0;
    CHECK(lq_norm(make_sinc_power(2), 2.0, small).tail_bound > est.tail_bound);
}

TEST_CASE("sampled power sum obeys the Plancherel-Polya bound on the lattice") {
    // integer nodes: delta = 1, sigma = pi; sum_n |f(n)|^q <= B ||f||_q^q
    const Signal f = make_sinc_combo({1.0, 0.5}, {0.0, 0.4});
    const double q = 2.0;
    StableSum s;
    for (long long n = -20000; n <= 20000; ++n)
        s.add(std::pow(std::abs(f(static_cast<double>(n))), q));
    const double b = pp_constant_1d(q, 1.0, kPi);
    const double norm_q = std::pow(lq_norm(f, q).upper(), q);
    CHECK(s.value() <= b * norm_q);
}
