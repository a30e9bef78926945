#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "winsamp/kernel.hpp"

using namespace winsamp;

namespace {

// Independent oracle: the closed-form products evaluated naively in long
// double, no log accumulation and no singularity pairing.  Valid away from
// nodes and integer x.
long double naive_inside(long long n, long double x, const NodeSet& ns) {
    const IndexRange w = ns.window(0);
    const long double tn = ns.node(0, n);
    long double v = (static_cast<long double>(n) - tn) * std::sin(static_cast<long double>(kPi) * x) /
                    ((static_cast<long double>(n) - x) * std::sin(static_cast<long double>(kPi) * tn));
    for (long long j = w.lo; j <= w.hi; ++j) {
        if (j == n) continue;
        const long double tj = ns.node(0, j);
        v *= (tj - x) * (static_cast<long double>(j) - tn) /
             ((tj - tn) * (static_cast<long double>(j) - x));
    }
    return v;
}

long double naive_outside(long long n, long double x, const NodeSet& ns) {
    const IndexRange w = ns.window(0);
    const long double nd = static_cast<long double>(n);
    long double v = ((n % 2 == 0) ? 1.0L : -1.0L) * std::sin(static_cast<long double>(kPi) * x) /
                    (static_cast<long double>(kPi) * (x - nd));
    for (long long j = w.lo; j <= w.hi; ++j) {
        const long double tj = ns.node(0, j);
        v *= (tj - x) * (static_cast<long double>(j) - nd) /
             ((tj - nd) * (static_cast<long double>(j) - x));
    }
    return v;
}

JitterSpec constant_jitter(double m) {
    JitterSpec jit;
    jit.kind = JitterKind::constant;
    jit.amplitudes = {m};
    return jit;
}

} // namespace

TEST_CASE("sinc") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(std::abs(sinc(1.0)) < 1e-16);
    CHECK(sinc(0.5) == doctest::Approx(2.0 / kPi).epsilon(1e-15));
    CHECK(sinc(-0.5) == doctest::Approx(2.0 / kPi).epsilon(1e-15));
    // series branch agrees with the quotient
    for (double t : {1e-7, 3e-7, 9e-7, -5e-7}) {
        const double q = std::sin(kPi * t) / (kPi * t);
        CHECK(sinc(t) == doctest::Approx(q).epsilon(1e-15));
    }
}

TEST_CASE("zero-jitter kernels reduce to sinc(x - n)") {
    const NodeSet ns({0.3}, {8}, JitterSpec::none());
    for (double x = -2.0; x <= 2.0; x += 0.0437) {
        for (long long n = -12; n <= 12; ++n) {
            const KernelEval k = ns.in_window(0, n) ? kernel_inside(n, x, ns)
                                                    : kernel_outside(n, x, ns);
            const double expected = sinc(x - static_cast<double>(n));
            if (std::abs(expected) > 1e-14) {
                CHECK(k.value == doctest::Approx(expected).epsilon(1e-12));
            } else {
                CHECK(std::abs(k.value) < 1e-12);
            }
        }
    }
}

TEST_CASE("interpolation property is exact at the nodes") {
    JitterSpec jit;
    jit.kind = JitterKind::uniform;
    jit.amplitudes = {0.2};
    jit.seed = 7;
    const NodeSet ns({0.3}, {4}, jit);
    const IndexRange w = ns.window(0);
    for (long long m = w.lo; m <= w.hi; ++m) {
        const double tm = ns.node(0, m);
        for (long long n = w.lo; n <= w.hi; ++n) {
            const KernelEval k = kernel_inside(n, tm, ns);
            if (n == m) {
                CHECK(k.value == 1.0);
                CHECK(k.sign == +1);
            } else {
                CHECK(k.value == 0.0);
                CHECK(k.sign == 0);
            }
        }
    }
}

TEST_CASE("frozen values for the constant-jitter window {-1,0,1,2}") {
    // center 0.3, N = 2, h = +0.1 inside the window
    const NodeSet ns({0.3}, {2}, constant_jitter(0.1));
    CHECK(kernel_outside(4, 0.3, ns).value ==
          doctest::Approx(-0.059065947270185018).epsilon(1e-13));
    CHECK(kernel_outside(-3, 0.3, ns).value ==
          doctest::Approx(-0.051227389130229886).epsilon(1e-13));
    CHECK(kernel_inside(1, 0.55, ns).value ==
          doctest::Approx(0.60408682943171802).epsilon(1e-13));
    CHECK(kernel_inside(-1, 0.55, ns).value ==
          doctest::Approx(-0.18218491681274035).epsilon(1e-13));
    CHECK(kernel_inside(0, 0.1, ns).value == 1.0); // x = t_0
}

TEST_CASE("kernels match the naive long-double products") {
    JitterSpec jit;
    jit.kind = JitterKind::uniform;
    jit.amplitudes = {0.15};
    jit.seed = 99;
    const NodeSet ns({0.4}, {6}, jit);
    const IndexRange w = ns.window(0);
    for (double x : {-1.77, -0.23, 0.4, 1.31, 2.68}) {
        for (long long n = w.lo; n <= w.hi; ++n)
            CHECK(kernel_inside(n, x, ns).value ==
                  doctest::Approx(static_cast<double>(naive_inside(n, x, ns))).epsilon(1e-11));
        for (long long n : {w.lo - 3, w.lo - 1, w.hi + 1, w.hi + 4})
            CHECK(kernel_outside(n, x, ns).value ==
                  doctest::Approx(static_cast<double>(naive_outside(n, x, ns))).epsilon(1e-11));
    }
}

TEST_CASE("inside and outside forms agree on an unjittered boundary index") {
    // custom jitter: zero at -1 and 2, nonzero at 0 and 1
    JitterSpec jit;
    jit.kind = JitterKind::custom;
    jit.amplitudes = {0.12};
    jit.generator = [](int, long long n) -> double {
        if (n == 0) return 0.1;
        if (n == 1) return -0.07;
        return 0.0;
    };
    const NodeSet with_boundary({0.3}, {2}, jit);  // window {-1,0,1,2}
    const NodeSet without_boundary({0.0}, {1}, jit); // window {-1,0,1}
    for (double x = -0.9; x <= 1.25; x += 0.0731) {
        const KernelEval in = kernel_inside(2, x, with_boundary);
        const KernelEval out = kernel_outside(2, x, without_boundary);
        CHECK(in.value == doctest::Approx(out.value).epsilon(1e-12));
    }
}

TEST_CASE("kernel_outside vanishes at integer x when the nearest node is unjittered") {
    JitterSpec jit;
    jit.kind = JitterKind::custom;
    jit.amplitudes = {0.1};
    jit.generator = [](int, long long n) -> double { return n == 0 ? 0.0 : 0.1; };
    const NodeSet ns({0.3}, {2}, jit);
    const KernelEval k = kernel_outside(5, 0.0, ns); // x = t_0 = 0
    CHECK(k.value == 0.0);
    CHECK(k.sign == 0);
}

TEST_CASE("coincident nodes are rejected") {
    JitterSpec jit;
    jit.kind = JitterKind::custom;
    jit.amplitudes = {0.4};
    jit.generator = [](int, long long n) -> double {
        if (n == 0) return 0.4;
        if (n == 1) return -0.4;
        return 0.0;
    };
    const NodeSet ns({0.3}, {2}, jit);
    // t_0 = 0.4, t_1 = 0.6 -> distinct is fine
    CHECK_NOTHROW(kernel_inside(0, 0.2, ns));

    // push t_0 and t_1 within 1e-13 of each other while staying below M = 1/2
    const double m = 0.49999999999995;
    JitterSpec clash;
    clash.kind = JitterKind::custom;
    clash.amplitudes = {m};
    clash.generator = [m](int, long long n) -> double {
        if (n == 0) return m;
        if (n == 1) return -m;
        return 0.0;
    };
    const NodeSet bad({0.3}, {2}, clash);
    CHECK_THROWS_AS(kernel_inside(0, 0.2, bad), std::invalid_argument);
}

TEST_CASE("log-domain evaluation survives N = 10^6") {
    JitterSpec jit;
    jit.kind = JitterKind::uniform;
    jit.amplitudes = {0.2};
    jit.seed = 3;
    const NodeSet ns({0.3}, {1000000}, jit);
    const KernelEval in = kernel_inside(5, 0.3, ns);
    CHECK(std::isfinite(in.log_abs));
    CHECK(in.sign != 0);
    const KernelEval out = kernel_outside(1000002, 0.3, ns);
    CHECK(std::isfinite(out.log_abs));
}

TEST_CASE("kernel_tensor") {
    SUBCASE("zero jitter factorizes into sincs") {
        const NodeSet ns({0.3, -0.6}, {4, 4}, JitterSpec::none(2));
        const std::vector<double> x{0.3, -0.6};
        for (long long n1 = -2; n1 <= 2; ++n1)
            for (long long n2 = -3; n2 <= 1; ++n2) {
                const KernelEval k = kernel_tensor({n1, n2}, x, ns);
                const double expected = sinc(x[0] - static_cast<double>(n1)) *
                                        sinc(x[1] - static_cast<double>(n2));
                CHECK(k.value == doctest::Approx(expected).epsilon(1e-12));
            }
    }
    SUBCASE("one at its own node, zero when any axis vanishes") {
        JitterSpec jit;
        jit.kind = JitterKind::uniform;
        jit.amplitudes = {0.1, 0.1};
        jit.seed = 11;
        const NodeSet ns({0.2, 0.7}, {3, 3}, jit);
        const std::vector<long long> n{0, 1};
        const std::vector<double> tn{ns.node(0, 0), ns.node(1, 1)};
        CHECK(kernel_tensor(n, tn, ns).value == 1.0);
        const std::vector<double> other{ns.node(0, 1), tn[1]}; // axis 1 at a different node
        const KernelEval k = kernel_tensor(n, other, ns);
        CHECK(k.value == 0.0);
        CHECK(k.sign == 0);
    }
}
