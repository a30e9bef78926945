#ifndef WINSAMP_BOUNDS_HPP
#define WINSAMP_BOUNDS_HPP

/*
 * Truncation-error bound constants for windowed irregular sampling.
 *
 * The closed forms contain ratios of factors like (2N+1)^{2N+1} that are
 * individually unrepresentable past N ~ 100, so every constant is assembled
 * in the log domain with the large-N differences rewritten through log1p:
 *
 *   a ln a - (a-M) ln(a-M) = -(a-M) log1p(-M/a) + M ln a
 *
 * which stays fully conditioned up to N ~ 10^6 and beyond.
 */

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "winsamp/kernel.hpp"
#include "winsamp/sampling_set.hpp"
#include "winsamp/stable_sum.hpp"

namespace winsamp {

/// 1-D Plancherel-Polya constant B = 8 (e^{r delta sigma / 2} - 1) / (r pi sigma delta^2).
inline double pp_constant_1d(double r, double delta, double sigma) {
    if (!(r > 0.0 && delta > 0.0 && sigma > 0.0))
        throw std::domain_error("pp_constant_1d: arguments must be positive");
    return 8.0 * std::expm1(r * delta * sigma / 2.0) / (r * kPi * sigma * delta * delta);
}

/// d-dimensional Plancherel-Polya constant (product over axes).
inline double pp_constant_multi(double r, const std::vector<double>& delta,
                                const std::vector<double>& sigma) {
    if (r < 1.0) throw std::domain_error("pp_constant_multi: r must be >= 1");
    if (delta.empty() || delta.size() != sigma.size())
        throw std::invalid_argument("pp_constant_multi: dimension mismatch");
    double b = 1.0;
    for (std::size_t l = 0; l < delta.size(); ++l) {
        if (!(delta[l] > 0.0 && sigma[l] > 0.0))
            throw std::domain_error("pp_constant_multi: delta and sigma must be positive");
        b *= (8.0 / (r * kPi)) * std::expm1(r * delta[l] * sigma[l] / 2.0) /
             (sigma[l] * delta[l] * delta[l]);
    }
    return b;
}

namespace detail {

// a ln a - (a - m) ln(a - m), stable for m << a.
inline double pow_diff(double a, double m) {
    return -(a - m) * std::log1p(-m / a) + m * std::log(a);
}

inline void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
}

} // namespace detail

/// ln C_1(N, M) for Hoelder exponent p > 1.
inline double log_c1(long long n, double m, double p) {
    detail::require(p > 1.0, "c1: requires p > 1");
    detail::require(n >= 1 && m >= 0.0 && m < 1.0, "c1: requires N >= 1, 0 <= M < 1");
    const double nd = static_cast<double>(n);
    detail::require(nd - m - 0.5 > 0.0, "c1: requires N - M - 1/2 > 0");
    StableSum bracket; // log of the base raised to p
    bracket.add(2.0 * m * std::numbers::ln2);
    bracket.add(std::log(m + 0.5));
    bracket.add((1.0 - 2.0 * m) * std::log1p(2.0 * m));
    bracket.add(-m * std::log1p(-m));
    bracket.add(-std::log1p(-m / (nd - 0.5))); // ln(N-1/2) - ln(N-M-1/2)
    bracket.add(detail::pow_diff(2.0 * nd + 1.0, m)); // (2N+1)^{2N+1} / (2N+1-M)^{2N+1-M}
    // (N+M)^{2(N+M)} / N^{2N+1}: 2(N+M)ln(N+M) - (2N+1)ln N
    bracket.add(2.0 * (nd + m) * std::log1p(m / nd));
    bracket.add((2.0 * m - 1.0) * std::log(nd));
    return std::numbers::ln2 + p * bracket.value() + std::log1p(nd / (p - 1.0));
}

inline double c1(long long n, double m, double p) { return std::exp(log_c1(n, m, p)); }

/// ln C_3(N, M).
inline double log_c3(long long n, double m) {
    detail::require(m >= 0.0 && m < 0.5, "c3: requires 0 <= M < 1/2");
    const double nd = static_cast<double>(n);
    detail::require(nd - 1.0 - 2.0 * m > 0.0, "c3: requires N - 1 - 2M > 0");
    StableSum s;
    s.add(2.0 * m * std::numbers::ln2);
    s.add(2.0 * m * std::log1p(-m));
    s.add(-std::log(sinc(m)));
    s.add(-(2.0 * m - 1.0) * std::log1p(2.0 * m));
    s.add(-4.0 * m * std::log1p(-2.0 * m));
    // (N-1-M)^{2(N-1-M)} / (N-1-2M)^{2(N-1-2M)}
    s.add(2.0 * detail::pow_diff(nd - 1.0 - m, m));
    // (N+M)^{2(N+M)} / N^{2N}
    s.add(2.0 * (nd * std::log1p(m / nd) + m * std::log(nd + m)));
    return s.value();
}

inline double c3(long long n, double m) { return std::exp(log_c3(n, m)); }

/// ln C_2(N, M, delta) = ln C_3 + ln((M + 1/2)(1 + M/delta)).
inline double log_c2(long long n, double m, double delta) {
    detail::require(delta > 0.0, "c2: requires delta > 0");
    return log_c3(n, m) + std::log(m + 0.5) + std::log1p(m / delta);
}

inline double c2(long long n, double m, double delta) { return std::exp(log_c2(n, m, delta)); }

/// C_4(N) = (2^{p-1}(2p-1) + p - (N-1/2)^{1-p} - (N-1)^{1-p}) / (p-1).
inline double c4(long long n, double p) {
    detail::require(p > 1.0, "c4: requires p > 1");
    detail::require(n >= 2, "c4: requires N >= 2");
    const double nd = static_cast<double>(n);
    return (std::exp2(p - 1.0) * (2.0 * p - 1.0) + p - std::pow(nd - 0.5, 1.0 - p) -
            std::pow(nd - 1.0, 1.0 - p)) /
           (p - 1.0);
}

/// Hoelder conjugate of q (> 1).
inline double conjugate_exponent(double q) {
    if (!(q > 1.0)) throw std::domain_error("conjugate exponent requires q > 1");
    return q / (q - 1.0);
}

/// Inputs for the truncation bound K_delta(N, M).
struct BoundInputs {
    int d = 1;
    std::vector<long long> radii;  // N_j
    std::vector<double> jitter;    // M_j in [0, 1/2)
    std::vector<double> delta;     // per-axis separation, >= 1 - 2 M_j
    double q = 2.0;

    static BoundInputs uniform(int d, long long n, double m, double q) {
        BoundInputs b;
        b.d = d;
        b.radii.assign(static_cast<std::size_t>(d), n);
        b.jitter.assign(static_cast<std::size_t>(d), m);
        b.delta.assign(static_cast<std::size_t>(d), 1.0 - 2.0 * m);
        b.q = q;
        return b;
    }

    void validate() const {
        if (d < 1 || radii.size() != static_cast<std::size_t>(d) ||
            jitter.size() != static_cast<std::size_t>(d) ||
            delta.size() != static_cast<std::size_t>(d))
            throw std::invalid_argument("BoundInputs: dimension mismatch");
        if (!(q > 1.0))
            throw std::domain_error("bound not available for q=1 (requires finite p)");
        for (int j = 0; j < d; ++j) {
            const double m = jitter[static_cast<std::size_t>(j)];
            if (!(m >= 0.0) || m >= 0.5)
                throw std::domain_error("BoundInputs: M must lie in [0, 1/2)");
            if (!(delta[static_cast<std::size_t>(j)] > 0.0))
                throw std::domain_error("BoundInputs: delta must be positive");
        }
        double m_tilde = 0.0;
        for (double m : jitter) m_tilde = std::max(m_tilde, m);
        if (!admissible(m_tilde, q, d, AdmissibilityMode::expansion))
            throw std::domain_error("BoundInputs: jitter amplitude not admissible for q=" +
                                    std::to_string(q));
    }
};

/// Per-axis constants plus the assembled A_p, B_q and K_delta factors.
struct BoundBreakdown {
    std::vector<double> c1, c2, c3, c4;
    double a_p = 0.0;        // bracketed sum of the kernel tail, power 1/p
    double b_q = 0.0;        // Plancherel-Polya factor, power 1/q
    double k_delta = 0.0;    // = a_p * b_q
    double log_a_p = 0.0;
    double log_b_q = 0.0;
    double log_k_delta = 0.0;
};

namespace detail {

inline double log_sum_exp(const std::vector<double>& logs) {
    double mx = -std::numeric_limits<double>::infinity();
    for (double l : logs) mx = std::max(mx, l);
    if (!std::isfinite(mx)) return mx;
    StableSum s;
    for (double l : logs) s.add(std::exp(l - mx));
    return mx + std::log(s.value());
}

// log of the B_q factor (8/(q pi^2))^{d/q} prod_j (e^{q pi delta_j/2}-1)^{1/q} / delta_j^{2/q}.
inline double log_b_factor(double q, const std::vector<double>& delta) {
    StableSum s;
    for (double dl : delta) {
        s.add(std::log(8.0 / (q * kPi * kPi)));
        s.add(std::log(std::expm1(q * kPi * dl / 2.0)));
        s.add(-2.0 * std::log(dl));
    }
    return s.value() / q;
}

} // namespace detail

/// Assembles K_delta(N, M): the A_p kernel-tail factor times the B_q
/// Plancherel-Polya factor (sigma_j = pi).
inline BoundBreakdown k_bound(const BoundInputs& in) {
    in.validate();
    const double p = conjugate_exponent(in.q);
    const int d = in.d;

    BoundBreakdown out;
    std::vector<double> lc1(static_cast<std::size_t>(d)), term(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        const std::size_t js = static_cast<std::size_t>(j);
        const long long nj = in.radii[js];
        const double mj = in.jitter[js];
        const double dj = in.delta[js];
        lc1[js] = log_c1(nj, mj, p);
        const double lc3 = log_c3(nj, mj);
        const double lc2 = lc3 + std::log(mj + 0.5) + std::log1p(mj / dj);
        const double c4j = c4(nj, p);
        out.c1.push_back(std::exp(lc1[js]));
        out.c2.push_back(std::exp(lc2));
        out.c3.push_back(std::exp(lc3));
        out.c4.push_back(c4j);
        // C1 + C3^p + C4 C2^p, in the log domain
        term[js] = detail::log_sum_exp({lc1[js], p * lc3, std::log(c4j) + p * lc2});
    }

    std::vector<double> addends(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        StableSum s;
        s.add(lc1[static_cast<std::size_t>(k)]);
        for (int j = 0; j < d; ++j)
            if (j != k) s.add(term[static_cast<std::size_t>(j)]);
        addends[static_cast<std::size_t>(k)] = s.value();
    }
    out.log_a_p = detail::log_sum_exp(addends) / p;
    out.log_b_q = detail::log_b_factor(in.q, in.delta);
    out.log_k_delta = out.log_a_p + out.log_b_q;
    out.a_p = std::exp(out.log_a_p);
    out.b_q = std::exp(out.log_b_q);
    out.k_delta = std::exp(out.log_k_delta);
    return out;
}

/// Uniformised bound K~ of the Paley-Wiener corollary: M~ and the smallest
/// separation feed the A_p factor, the B factor takes the worse of the two
/// separation endpoints.
inline double k_tilde(const std::vector<long long>& radii, double m_tilde, double delta_lo,
                      double delta_hi, double q) {
    if (!(delta_lo > 0.0 && delta_lo <= delta_hi))
        throw std::domain_error("k_tilde: requires 0 < delta_lo <= delta_hi");
    BoundInputs in;
    in.d = static_cast<int>(radii.size());
    in.radii = radii;
    in.jitter.assign(radii.size(), m_tilde);
    in.delta.assign(radii.size(), delta_lo);
    in.q = q;
    const BoundBreakdown lo = k_bound(in);
    const double d = static_cast<double>(radii.size());
    const double b_lo = 8.0 * std::expm1(q * kPi * delta_lo / 2.0) / (q * kPi * kPi * delta_lo * delta_lo);
    const double b_hi = 8.0 * std::expm1(q * kPi * delta_hi / 2.0) / (q * kPi * kPi * delta_hi * delta_hi);
    return lo.a_p * std::pow(std::max(b_lo, b_hi), d / q);
}

/// Principal-branch Lambert W on [-1/e, inf), Halley iteration.
inline double lambert_w0_real(double y) {
    constexpr double inv_e = 0.36787944117144232;
    if (y < -inv_e - 1e-15) throw std::domain_error("lambert_w0_real: y < -1/e");
    if (y == 0.0) return 0.0;
    double w;
    if (y < -0.25) {
        const double r = std::sqrt(2.0 * (1.0 + std::numbers::e * y));
        w = -1.0 + r - r * r / 3.0 + 11.0 * r * r * r / 72.0;
    } else if (y < 3.0) {
        w = y / (1.0 + y); // crude but inside the Halley basin
    } else {
        const double l = std::log(y);
        w = l - std::log(l);
    }
    for (int it = 0; it < 50; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - y;
        if (std::abs(f) <= 1e-13 * std::max(1.0, std::abs(y))) break;
        const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        if (denom == 0.0 || !std::isfinite(denom)) break;
        const double step = f / denom;
        w -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) break;
    }
    return w;
}

/// Separation minimising the Plancherel-Polya factor (e^{q pi delta/2}-1)/delta^2.
inline double delta_star(double q) {
    if (!(q >= 1.0)) throw std::domain_error("delta_star: requires q >= 1");
    const double z_star = lambert_w0_real(-2.0 / (std::numbers::e * std::numbers::e)) + 2.0;
    return 2.0 * z_star / (q * kPi);
}

enum class BoundConstant { C1, C2, C3, C4 };

/// Large-N growth exponent of the named constant.
inline double asymptotic_exponent(BoundConstant c, double m, double p) {
    switch (c) {
        case BoundConstant::C1:
            detail::require(p > 1.0, "asymptotic_exponent: C1 requires p > 1");
            return 1.0 + 3.0 * m * p - p;
        case BoundConstant::C2:
        case BoundConstant::C3:
            return 4.0 * m;
        case BoundConstant::C4:
            return 0.0;
    }
    throw std::invalid_argument("asymptotic_exponent: unknown constant");
}

} // namespace winsamp

#endif
