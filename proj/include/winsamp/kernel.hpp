#ifndef WINSAMP_KERNEL_HPP
#define WINSAMP_KERNEL_HPP

/*
 * Window canonical product sampling kernel.  The 1-D kernel psi_N(n, x) is
 * the Lagrange-type ratio G_N(x,x) / (G_N'(x,t_n) (x - t_n)) where G_N is
 * the sine canonical product with the window's zeros moved from k to t_k.
 * Both closed forms below follow by differentiating the product at its
 * simple zero:
 *
 *   n inside the window:
 *     psi(n,x) = (n-t_n) sin(pi x) / ((n-x) sin(pi t_n))
 *                * prod_{j in W, j != n} (t_j-x)(j-t_n) / ((t_j-t_n)(j-x))
 *   n outside the window (t_n = n):
 *     psi(n,x) = (-1)^n sin(pi x) / (pi (x-n))
 *                * prod_{j in W} (t_j-x)(j-n) / ((t_j-n)(j-x))
 *
 * Products are accumulated as (sign, sum of log|factor|) so that windows up
 * to N ~ 10^6 evaluate without overflow.  Near-cancelling pairs
 * sin(pi x) / (j_x - x) are rewritten through sinc(x - j_x) before taking
 * logs, which keeps every accumulated factor well conditioned.
 */

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "winsamp/sampling_set.hpp"
#include "winsamp/stable_sum.hpp"

namespace winsamp {

inline constexpr double kPi = std::numbers::pi;

/// sin(pi t) / (pi t), exactly 1 at t = 0.
inline double sinc(double t) {
    if (t == 0.0) return 1.0;
    const double pt = kPi * t;
    if (std::abs(t) < 1e-6) {
        // Leading Taylor terms; below this scale the quotient loses digits.
        const double s = pt * pt;
        return 1.0 - s / 6.0 * (1.0 - s / 20.0);
    }
    return std::sin(pt) / pt;
}

/// Sign/log-magnitude split of a kernel value.
struct KernelEval {
    double value = 0.0;
    double log_abs = -std::numeric_limits<double>::infinity();
    int sign = 0;

    static KernelEval zero() { return {}; }

    static KernelEval one() { return {1.0, 0.0, +1}; }
};

namespace detail {

// Running product kept as (sign, compensated sum of log|factor|).
struct LogProduct {
    int sign = 1;
    StableSum log_abs;

    void mul(double factor) {
        if (sign == 0) return;
        if (factor == 0.0 || std::abs(factor) < 1e-300) {
            sign = 0;
            return;
        }
        if (factor < 0.0) sign = -sign;
        log_abs.add(std::log(std::abs(factor)));
    }

    KernelEval finish() const {
        if (sign == 0) return KernelEval::zero();
        const double l = log_abs.value();
        return {static_cast<double>(sign) * std::exp(l), l, sign};
    }
};

inline double node_tolerance(double x) { return 1e-9 * (1.0 + std::abs(x)); }

inline int parity_sign(long long n) { return (n % 2 == 0) ? +1 : -1; } // (-1)^n

} // namespace detail

/// psi_N(n, x) for n inside the window of `ns` along `axis`.
inline KernelEval kernel_inside(long long n, double x, const NodeSet& ns, int axis = 0) {
    if (!ns.in_window(axis, n))
        throw std::invalid_argument("kernel_inside: index outside window");
    const IndexRange w = ns.window(axis);
    const double tn = ns.node(axis, n);
    const double hn = tn - static_cast<double>(n);
    const double tol = detail::node_tolerance(x);

    if (std::abs(x - tn) < tol) return KernelEval::one();
    for (long long j = w.lo; j <= w.hi; ++j) {
        if (j == n) continue;
        const double tj = ns.node(axis, j);
        if (std::abs(tj - tn) < 1e-12)
            throw std::invalid_argument("kernel_inside: coincident nodes t_" +
                                        std::to_string(j) + " and t_" + std::to_string(n));
        if (std::abs(x - tj) < tol) return KernelEval::zero();
    }

    const long long jx = nearest_index(x);
    const bool pair_jx = (jx != n) && jx >= w.lo && jx <= w.hi;

    detail::LogProduct prod;
    // (n - t_n) / sin(pi t_n) == (-1)^{n+1} / (pi sinc(h_n)); exact limit at h_n = 0.
    prod.mul(-detail::parity_sign(n) / (kPi * sinc(hn)));

    if (jx == n) {
        // sin(pi x) / (n - x) = -(-1)^n pi sinc(x - n)
        prod.mul(-detail::parity_sign(n) * kPi * sinc(x - static_cast<double>(n)));
    } else {
        prod.mul(1.0 / (static_cast<double>(n) - x));
        if (pair_jx) {
            // sin(pi x) / (j_x - x) = -(-1)^{j_x} pi sinc(x - j_x)
            prod.mul(-detail::parity_sign(jx) * kPi * sinc(x - static_cast<double>(jx)));
            const double tjx = ns.node(axis, jx);
            prod.mul(tjx - x);
            prod.mul((static_cast<double>(jx) - tn) / (tjx - tn));
        } else {
            prod.mul(std::sin(kPi * x));
        }
    }

    for (long long j = w.lo; j <= w.hi; ++j) {
        if (j == n || (pair_jx && j == jx)) continue;
        const double tj = ns.node(axis, j);
        const double jd = static_cast<double>(j);
        prod.mul((tj - x) / (jd - x));
        prod.mul((jd - tn) / (tj - tn));
    }
    return prod.finish();
}

/// psi_N(n, x) for n outside the window of `ns` along `axis` (t_n = n).
inline KernelEval kernel_outside(long long n, double x, const NodeSet& ns, int axis = 0) {
    if (ns.in_window(axis, n))
        throw std::invalid_argument("kernel_outside: index inside window");
    const IndexRange w = ns.window(axis);
    const double nd = static_cast<double>(n);
    const double tol = detail::node_tolerance(x);

    for (long long j = w.lo; j <= w.hi; ++j)
        if (std::abs(x - ns.node(axis, j)) < tol) return KernelEval::zero();

    const long long jx = nearest_index(x);
    const bool pair_jx = jx >= w.lo && jx <= w.hi;

    detail::LogProduct prod;
    prod.mul(detail::parity_sign(n) / (kPi * (x - nd)));
    if (pair_jx) {
        prod.mul(-detail::parity_sign(jx) * kPi * sinc(x - static_cast<double>(jx)));
        const double tjx = ns.node(axis, jx);
        prod.mul(tjx - x);
        prod.mul((static_cast<double>(jx) - nd) / (tjx - nd));
    } else {
        prod.mul(std::sin(kPi * x));
    }

    for (long long j = w.lo; j <= w.hi; ++j) {
        if (pair_jx && j == jx) continue;
        const double tj = ns.node(axis, j);
        const double jd = static_cast<double>(j);
        prod.mul((tj - x) / (jd - x));
        prod.mul((jd - nd) / (tj - nd));
    }
    return prod.finish();
}

/// Per-axis kernel, inside or outside form as the index position dictates.
inline KernelEval kernel_axis(long long n, double x, const NodeSet& ns, int axis) {
    return ns.in_window(axis, n) ? kernel_inside(n, x, ns, axis)
                                 : kernel_outside(n, x, ns, axis);
}

/// Tensor-product kernel S(x, t_n): product over axes of the 1-D kernels,
/// combined as sign product and log-magnitude sum.
inline KernelEval kernel_tensor(const std::vector<long long>& n,
                                const std::vector<double>& x,
                                const NodeSet& ns) {
    if (static_cast<int>(n.size()) != ns.dimension() || n.size() != x.size())
        throw std::invalid_argument("kernel_tensor: dimension mismatch");
    int sign = 1;
    StableSum log_abs;
    for (int axis = 0; axis < ns.dimension(); ++axis) {
        const KernelEval k = kernel_axis(n[static_cast<std::size_t>(axis)],
                                         x[static_cast<std::size_t>(axis)], ns, axis);
        if (k.sign == 0) return KernelEval::zero();
        sign *= k.sign;
        log_abs.add(k.log_abs);
    }
    const double l = log_abs.value();
    return {static_cast<double>(sign) * std::exp(l), l, sign};
}

} // namespace winsamp

#endif
