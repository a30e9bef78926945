#ifndef WINSAMP_SIGNAL_BANK_HPP
#define WINSAMP_SIGNAL_BANK_HPP

/*
 * Bandlimited test signals with exactly known exponential type and analytic
 * decay envelopes, as tensor products of 1-D sinc-based building blocks:
 *
 *   sinc_power k:         sinc(x/k)^k        type pi, decay |x|^{-k}
 *   shifted_sinc_combo:   sum a_i sinc(x-s_i) type pi, decay |x|^{-1}
 *
 * L^q norms are computed by composite quadrature on [-R, R] plus a certified
 * tail overestimate from the power-law envelope, so `upper()` always bounds
 * the true norm from above (the direction the bound certificates need).
 */

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "winsamp/kernel.hpp"
#include "winsamp/stable_sum.hpp"

namespace winsamp {

/// One axis of a bank signal.
class AxisSignal {
public:
    static AxisSignal sinc_power(int k) {
        if (k < 1) throw std::invalid_argument("sinc_power: exponent must be >= 1");
        AxisSignal s;
        s.power_ = k;
        return s;
    }

    static AxisSignal sinc_combo(std::vector<double> coeffs, std::vector<double> shifts) {
        if (coeffs.empty() || coeffs.size() != shifts.size())
            throw std::invalid_argument("sinc_combo: coeffs and shifts must match and be non-empty");
        AxisSignal s;
        s.power_ = 0;
        s.coeffs_ = std::move(coeffs);
        s.shifts_ = std::move(shifts);
        return s;
    }

    double operator()(double x) const {
        if (power_ > 0) {
            const double base = sinc(x / static_cast<double>(power_));
            double v = 1.0;
            for (int i = 0; i < power_; ++i) v *= base;
            return v;
        }
        StableSum s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            s.add(coeffs_[i] * sinc(x - shifts_[i]));
        return s.value();
    }

    /// |f(x)| <= envelope_coeff / (|x| - shift_margin)^decay for |x| > shift_margin + decay/pi-ish.
    int decay() const { return power_ > 0 ? power_ : 1; }

    double shift_margin() const {
        double m = 0.0;
        for (double s : shifts_) m = std::max(m, std::abs(s));
        return m;
    }

    double envelope_coeff() const {
        if (power_ > 0)
            return std::pow(static_cast<double>(power_) / kPi, power_);
        double c = 0.0;
        for (double a : coeffs_) c += std::abs(a) / kPi;
        return c;
    }

    /// Smallest q with f in L^q is decay()^{-1}; membership needs q * decay > 1.
    bool in_lq(double q) const { return q * decay() > 1.0; }

    std::string describe() const {
        std::ostringstream os;
        if (power_ == 1) {
            os << "sinc";
        } else if (power_ > 1) {
            os << "sinc(x/" << power_ << ")^" << power_;
        } else {
            os << "combo[";
            for (std::size_t i = 0; i < coeffs_.size(); ++i) {
                if (i) os << ", ";
                os << coeffs_[i] << "*sinc(x-" << shifts_[i] << ")";
            }
            os << "]";
        }
        return os.str();
    }

private:
    int power_ = 1;               // > 0: sinc(x/k)^k; 0: shifted combo
    std::vector<double> coeffs_;
    std::vector<double> shifts_;
};

/// Tensor product of per-axis bank signals; exponential type pi per axis.
class Signal {
public:
    explicit Signal(std::vector<AxisSignal> axes, std::string description = "")
        : axes_(std::move(axes)), description_(std::move(description)) {
        if (axes_.empty()) throw std::invalid_argument("Signal: needs at least one axis");
        if (description_.empty()) {
            std::ostringstream os;
            for (std::size_t j = 0; j < axes_.size(); ++j) {
                if (j) os << " (x) ";
                os << axes_[j].describe();
            }
            description_ = os.str();
        }
    }

    int dimension() const { return static_cast<int>(axes_.size()); }
    const AxisSignal& axis(int j) const { return axes_.at(static_cast<std::size_t>(j)); }
    const std::string& description() const { return description_; }

    std::vector<double> exponential_type() const {
        return std::vector<double>(axes_.size(), kPi);
    }

    double operator()(const std::vector<double>& x) const {
        if (x.size() != axes_.size())
            throw std::invalid_argument("Signal: dimension mismatch");
        double v = 1.0;
        for (std::size_t j = 0; j < axes_.size(); ++j) v *= axes_[j](x[j]);
        return v;
    }

    double operator()(double x) const { return (*this)(std::vector<double>{x}); }

    bool in_lq(double q) const {
        for (const auto& a : axes_)
            if (!a.in_lq(q)) return false;
        return true;
    }

private:
    std::vector<AxisSignal> axes_;
    std::string description_;
};

enum class QuadratureRule { midpoint, simpson };

struct QuadratureSpec {
    double radius = 16384.0; // 2^14
    int nodes_per_unit = 64;
    QuadratureRule rule = QuadratureRule::simpson;
};

/// Quadrature value of ||f||_q^q with a certified tail overestimate.
struct NormEstimate {
    double q = 2.0;
    double quadrature = 0.0; // integral of |f|^q over [-R, R]
    double tail_bound = 0.0; // certified overestimate of the |x| > R remainder
    double error_estimate = 0.0;

    double value() const { return std::pow(quadrature, 1.0 / q); }
    double upper() const { return std::pow(quadrature + tail_bound, 1.0 / q); }
};

namespace detail {

inline double integrate_abs_pow(const AxisSignal& f, double q, double lo, double hi,
                                long long cells, QuadratureRule rule) {
    const double h = (hi - lo) / static_cast<double>(cells);
    StableSum s;
    if (rule == QuadratureRule::midpoint) {
        for (long long i = 0; i < cells; ++i) {
            const double x = lo + (static_cast<double>(i) + 0.5) * h;
            s.add(std::pow(std::abs(f(x)), q));
        }
        return s.value() * h;
    }
    // composite Simpson per cell
    for (long long i = 0; i < cells; ++i) {
        const double a = lo + static_cast<double>(i) * h;
        const double b = a + h;
        const double m = 0.5 * (a + b);
        s.add(std::pow(std::abs(f(a)), q) + 4.0 * std::pow(std::abs(f(m)), q) +
              std::pow(std::abs(f(b)), q));
    }
    return s.value() * h / 6.0;
}

} // namespace detail

/// L^q norm of a 1-D axis signal via quadrature plus envelope tail bound.
inline NormEstimate lq_norm_axis(const AxisSignal& f, double q, const QuadratureSpec& spec) {
    if (!(q >= 1.0)) throw std::domain_error("lq_norm: requires q >= 1");
    if (!f.in_lq(q))
        throw std::domain_error("lq_norm: signal not in L^q for q=" + std::to_string(q) +
                                " (decay too slow)");
    const double s_margin = f.shift_margin();
    const double r = spec.radius;
    if (r <= s_margin + 1.0)
        throw std::domain_error("lq_norm: truncation radius too small for the shift margin");
    const long long cells = static_cast<long long>(2.0 * r) * spec.nodes_per_unit;

    NormEstimate est;
    est.q = q;
    est.quadrature = detail::integrate_abs_pow(f, q, -r, r, cells, spec.rule);
    // int_{|x|>R} |f|^q <= 2 int_R^inf (C / (x - s_margin))^{kq} dx
    const double kq = static_cast<double>(f.decay()) * q;
    const double c = f.envelope_coeff();
    est.tail_bound = 2.0 * std::pow(c, q) * std::pow(r - s_margin, 1.0 - kq) / (kq - 1.0);
    // coarse rule-accuracy estimate: compare against half resolution
    const double coarse = detail::integrate_abs_pow(f, q, -r, r, cells / 2, spec.rule);
    est.error_estimate = std::abs(est.quadrature - coarse) + est.tail_bound;
    return est;
}

/// L^q norm of a tensor-product signal: per-axis norms compose multiplicatively.
inline NormEstimate lq_norm(const Signal& f, double q, const QuadratureSpec& spec = {}) {
    NormEstimate out;
    out.q = q;
    out.quadrature = 1.0;
    double upper_q = 1.0;
    double err = 0.0;
    for (int j = 0; j < f.dimension(); ++j) {
        const NormEstimate axis = lq_norm_axis(f.axis(j), q, spec);
        out.quadrature *= axis.quadrature;
        upper_q *= axis.quadrature + axis.tail_bound;
        err += axis.error_estimate;
    }
    out.tail_bound = upper_q - out.quadrature;
    out.error_estimate = err;
    return out;
}

/// Named constructors used by the CLI and tests.
inline Signal make_sinc_power(int k, int d = 1) {
    std::vector<AxisSignal> axes(static_cast<std::size_t>(d), AxisSignal::sinc_power(k));
    return Signal(std::move(axes));
}

inline Signal make_sinc_combo(std::vector<double> coeffs, std::vector<double> shifts) {
    return Signal({AxisSignal::sinc_combo(std::move(coeffs), std::move(shifts))});
}

inline Signal make_tensor(std::vector<AxisSignal> axes) { return Signal(std::move(axes)); }

/// Config-style factory: kind in {sinc_power, shifted_sinc_combo, tensor_product}.
/// For sinc_power params are {k} or {k, d}; for shifted_sinc_combo params are
/// a_1, s_1, ..., a_m, s_m; tensor_product takes per-axis powers k_1, ..., k_d.
inline Signal make_signal(const std::string& kind, const std::vector<double>& params,
                          double q = 0.0) {
    Signal s = [&] {
        if (kind == "sinc_power") {
            if (params.empty()) throw std::invalid_argument("sinc_power: missing exponent");
            const int k = static_cast<int>(params[0]);
            const int d = params.size() > 1 ? static_cast<int>(params[1]) : 1;
            return make_sinc_power(k, d);
        }
        if (kind == "shifted_sinc_combo") {
            if (params.empty() || params.size() % 2 != 0)
                throw std::invalid_argument("shifted_sinc_combo: needs coeff/shift pairs");
            std::vector<double> coeffs, shifts;
            for (std::size_t i = 0; i < params.size(); i += 2) {
                coeffs.push_back(params[i]);
                shifts.push_back(params[i + 1]);
            }
            return make_sinc_combo(std::move(coeffs), std::move(shifts));
        }
        if (kind == "tensor_product") {
            if (params.empty()) throw std::invalid_argument("tensor_product: needs axis powers");
            std::vector<AxisSignal> axes;
            for (double k : params) axes.push_back(AxisSignal::sinc_power(static_cast<int>(k)));
            return make_tensor(std::move(axes));
        }
        throw std::invalid_argument("unknown signal kind: " + kind);
    }();
    if (q > 0.0 && !s.in_lq(q))
        throw std::domain_error("signal " + s.description() + " is not in L^q for q=" +
                                std::to_string(q));
    return s;
}

} // namespace winsamp

#endif
