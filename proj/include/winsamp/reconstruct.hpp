#ifndef WINSAMP_RECONSTRUCT_HPP
#define WINSAMP_RECONSTRUCT_HPP

/*
 * Truncated window-canonical-product sampling sum and the measured-vs-
 * certified truncation error report.  The window travels with the
 * evaluation point: the node set is rebuilt per x, so jitter lives only on
 * the indices inside J_x, exactly the model the bound is proved under.
 */

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "winsamp/bounds.hpp"
#include "winsamp/kernel.hpp"
#include "winsamp/sampling_set.hpp"
#include "winsamp/signal_bank.hpp"
#include "winsamp/stable_sum.hpp"

namespace winsamp {

/// Rectangular evaluation grid, per-axis lo:hi:step.
struct GridSpec {
    std::vector<double> lo, hi, step;

    int dimension() const { return static_cast<int>(lo.size()); }

    void validate() const {
        if (lo.empty() || lo.size() != hi.size() || lo.size() != step.size())
            throw std::invalid_argument("GridSpec: dimension mismatch");
        for (std::size_t j = 0; j < lo.size(); ++j) {
            if (!(step[j] > 0.0) || !(hi[j] >= lo[j]))
                throw std::invalid_argument("GridSpec: requires step > 0 and hi >= lo");
        }
    }

    /// All grid points in lexicographic order.
    std::vector<std::vector<double>> points() const {
        validate();
        const int d = dimension();
        std::vector<long long> counts(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) {
            const std::size_t js = static_cast<std::size_t>(j);
            counts[js] = static_cast<long long>(std::floor((hi[js] - lo[js]) / step[js] + 1e-9)) + 1;
        }
        std::vector<std::vector<double>> out;
        std::vector<long long> idx(static_cast<std::size_t>(d), 0);
        while (true) {
            std::vector<double> x(static_cast<std::size_t>(d));
            for (int j = 0; j < d; ++j) {
                const std::size_t js = static_cast<std::size_t>(j);
                x[js] = lo[js] + static_cast<double>(idx[js]) * step[js];
            }
            out.push_back(std::move(x));
            int j = d - 1;
            while (j >= 0) {
                if (++idx[static_cast<std::size_t>(j)] < counts[static_cast<std::size_t>(j)]) break;
                idx[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
        }
        return out;
    }
};

/// Y_{J_x}(f; x): sum over the window of f(t_n) S(x, t_n), lexicographic
/// order with compensated summation.
inline double truncated_sum(const Signal& f, const std::vector<double>& x,
                            const std::vector<long long>& radii, const JitterSpec& jitter) {
    const int d = f.dimension();
    if (static_cast<int>(x.size()) != d || static_cast<int>(radii.size()) != d ||
        jitter.dimension() != d)
        throw std::invalid_argument("truncated_sum: dimension mismatch");
    const NodeSet ns(x, radii, jitter);

    // per-axis kernel values over the axis windows
    std::vector<IndexRange> win(static_cast<std::size_t>(d));
    std::vector<std::vector<double>> psi(static_cast<std::size_t>(d));
    std::vector<std::vector<double>> tnode(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        const std::size_t js = static_cast<std::size_t>(j);
        win[js] = ns.window(j);
        psi[js].reserve(static_cast<std::size_t>(win[js].size()));
        tnode[js].reserve(static_cast<std::size_t>(win[js].size()));
        for (long long n = win[js].lo; n <= win[js].hi; ++n) {
            psi[js].push_back(kernel_inside(n, x[js], ns, j).value);
            tnode[js].push_back(ns.node(j, n));
        }
    }

    StableSum sum;
    std::vector<long long> idx(static_cast<std::size_t>(d), 0);
    std::vector<double> t(static_cast<std::size_t>(d));
    while (true) {
        double w = 1.0;
        for (int j = 0; j < d; ++j) {
            const std::size_t js = static_cast<std::size_t>(j);
            w *= psi[js][static_cast<std::size_t>(idx[js])];
            t[js] = tnode[js][static_cast<std::size_t>(idx[js])];
        }
        if (w != 0.0) sum.add(f(t) * w);
        int j = d - 1;
        while (j >= 0) {
            const std::size_t js = static_cast<std::size_t>(j);
            if (++idx[js] < win[js].size()) break;
            idx[js] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return sum.value();
}

struct ReconstructionRequest {
    Signal signal;
    std::vector<long long> radii;
    JitterSpec jitter;
    GridSpec grid;
    bool certify = true;
    double q = 2.0;
    QuadratureSpec quadrature;
    bool keep_residuals = true;
};

struct ResidualRow {
    std::vector<double> x;
    double f = 0.0;
    double y = 0.0;
    double residual = 0.0;
};

struct ErrorReport {
    double sup_error = 0.0;
    std::vector<double> argmax;
    bool certified = false;
    std::string uncertified_reason;
    std::optional<BoundBreakdown> bound;
    double k_delta = 0.0;
    double norm_upper = 0.0;
    double certified_bound = 0.0; // k_delta * norm_upper
    double tightness = 0.0;       // sup_error / certified_bound
    GridSpec grid;
    std::vector<ResidualRow> residuals;
};

/// Measures |f - Y| over the grid; when certification is requested and the
/// jitter is admissible, attaches K_delta (with the guaranteed separation
/// delta_j = 1 - 2 M_j) and the norm upper estimate.
inline ErrorReport measure_error(const ReconstructionRequest& req) {
    req.grid.validate();
    const int d = req.signal.dimension();
    if (req.grid.dimension() != d)
        throw std::invalid_argument("measure_error: grid/signal dimension mismatch");

    ErrorReport rep;
    rep.grid = req.grid;
    bool first = true;
    for (const auto& x : req.grid.points()) {
        const double fx = req.signal(x);
        const double yx = truncated_sum(req.signal, x, req.radii, req.jitter);
        const double r = std::abs(fx - yx);
        if (req.keep_residuals) rep.residuals.push_back({x, fx, yx, r});
        if (first || r > rep.sup_error) {
            rep.sup_error = r;
            rep.argmax = x;
            first = false;
        }
    }
    if (first) rep.argmax.assign(static_cast<std::size_t>(d), 0.0);

    if (req.certify) {
        const double m_tilde = req.jitter.max_amplitude();
        if (!(req.q > 1.0)) {
            rep.uncertified_reason = "bound not available for q=1";
        } else if (!admissible(m_tilde, req.q, d, AdmissibilityMode::expansion)) {
            rep.uncertified_reason = "jitter amplitude not admissible for q=" +
                                     std::to_string(req.q);
        } else {
            BoundInputs in;
            in.d = d;
            in.radii = req.radii;
            in.jitter = req.jitter.amplitudes;
            in.delta.resize(static_cast<std::size_t>(d));
            for (int j = 0; j < d; ++j)
                in.delta[static_cast<std::size_t>(j)] =
                    1.0 - 2.0 * req.jitter.amplitudes[static_cast<std::size_t>(j)];
            in.q = req.q;
            rep.bound = k_bound(in);
            rep.k_delta = rep.bound->k_delta;
            rep.norm_upper = lq_norm(req.signal, req.q, req.quadrature).upper();
            rep.certified_bound = rep.k_delta * rep.norm_upper;
            rep.tightness = rep.sup_error / rep.certified_bound;
            rep.certified = true;
        }
    }
    return rep;
}

} // namespace winsamp

#endif
