#ifndef WINSAMP_SAMPLING_SET_HPP
#define WINSAMP_SAMPLING_SET_HPP

/*
 * Irregular sampling node sets of the form t_n = n + h_n with window-local
 * jitter: nodes inside the window around the evaluation point carry a
 * bounded displacement |h_n| <= M, nodes outside coincide with the integer
 * lattice.  Nodes are generated lazily from (axis, index, seed), never
 * stored.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace winsamp {

enum class JitterKind { constant, alternating, uniform, custom };

inline const char* to_string(JitterKind k) {
    switch (k) {
        case JitterKind::constant: return "constant";
        case JitterKind::alternating: return "alternating";
        case JitterKind::uniform: return "uniform";
        case JitterKind::custom: return "custom";
    }
    return "?";
}

inline JitterKind jitter_kind_from_string(const std::string& s) {
    if (s == "constant") return JitterKind::constant;
    if (s == "alternating") return JitterKind::alternating;
    if (s == "uniform") return JitterKind::uniform;
    if (s == "custom") return JitterKind::custom;
    throw std::invalid_argument("unknown jitter kind: " + s);
}

namespace detail {

// splitmix64; fixed integer arithmetic, seed-stable across platforms.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic hash of (seed, axis, index) mapped to [-1, 1).
inline double unit_jitter(std::uint64_t seed, int axis, long long index) {
    std::uint64_t key = seed;
    key = splitmix64(key ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(axis + 1)));
    key = splitmix64(key ^ static_cast<std::uint64_t>(index));
    const double u01 = static_cast<double>(key >> 11) * 0x1.0p-53; // [0,1)
    return 2.0 * u01 - 1.0;
}

} // namespace detail

/// Per-axis jitter amplitudes plus a reproducible displacement rule.
struct JitterSpec {
    JitterKind kind = JitterKind::constant;
    std::vector<double> amplitudes; // M_j per axis, each in [0, 1/2)
    std::uint64_t seed = 0;
    // |generator(axis, n)| <= amplitudes[axis] must hold for custom rules.
    std::function<double(int, long long)> generator;

    static JitterSpec none(int d = 1) {
        JitterSpec j;
        j.amplitudes.assign(static_cast<std::size_t>(d), 0.0);
        return j;
    }

    int dimension() const { return static_cast<int>(amplitudes.size()); }

    double amplitude(int axis) const { return amplitudes.at(static_cast<std::size_t>(axis)); }

    double max_amplitude() const {
        double m = 0.0;
        for (double a : amplitudes) m = std::max(m, a);
        return m;
    }

    double offset(int axis, long long n) const {
        const double m = amplitude(axis);
        switch (kind) {
            case JitterKind::constant:
                return m;
            case JitterKind::alternating:
                return ((n % 2) == 0) ? m : -m;
            case JitterKind::uniform:
                return m * detail::unit_jitter(seed, axis, n);
            case JitterKind::custom: {
                if (!generator)
                    throw std::invalid_argument("custom jitter without generator");
                const double h = generator(axis, n);
                if (std::abs(h) > m)
                    throw std::invalid_argument("custom jitter exceeds amplitude bound");
                return h;
            }
        }
        return 0.0;
    }
};

/// Unique integer j with j - 1/2 <= x < j + 1/2 (half-open, rounds up at .5).
inline long long nearest_index(double x) {
    return static_cast<long long>(std::floor(x + 0.5));
}

struct IndexRange {
    long long lo = 0;
    long long hi = -1; // empty when hi < lo
    long long size() const { return hi < lo ? 0 : hi - lo + 1; }
};

/// Integers n with |x - n| <= N (boundary included).
inline IndexRange axis_window(double x, long long radius) {
    if (radius < 1) throw std::invalid_argument("window radius must be >= 1");
    return {static_cast<long long>(std::ceil(x - static_cast<double>(radius))),
            static_cast<long long>(std::floor(x + static_cast<double>(radius)))};
}

/// Truncation radii N_j and the window center x defining the index set J_x.
struct WindowSpec {
    std::vector<long long> radii;
    std::vector<double> center;
};

/// Multi-indices n with |x_j - n_j| <= N_j on every axis, lexicographic.
inline std::vector<std::vector<long long>>
window_index_set(const std::vector<double>& x, const std::vector<long long>& radii) {
    if (x.size() != radii.size())
        throw std::invalid_argument("window_index_set: dimension mismatch");
    const int d = static_cast<int>(x.size());
    std::vector<IndexRange> ranges;
    ranges.reserve(static_cast<std::size_t>(d));
    std::size_t total = 1;
    for (int j = 0; j < d; ++j) {
        ranges.push_back(axis_window(x[static_cast<std::size_t>(j)],
                                     radii[static_cast<std::size_t>(j)]));
        total *= static_cast<std::size_t>(ranges.back().size());
    }
    std::vector<std::vector<long long>> out;
    out.reserve(total);
    std::vector<long long> cur(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) cur[static_cast<std::size_t>(j)] = ranges[static_cast<std::size_t>(j)].lo;
    if (total == 0) return out;
    while (true) {
        out.push_back(cur);
        int j = d - 1;
        while (j >= 0) {
            if (++cur[static_cast<std::size_t>(j)] <= ranges[static_cast<std::size_t>(j)].hi) break;
            cur[static_cast<std::size_t>(j)] = ranges[static_cast<std::size_t>(j)].lo;
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

/// Jittered lattice around a window center: t_n = n + h_n inside the window,
/// t_n = n outside.
class NodeSet {
public:
    NodeSet(std::vector<double> center, std::vector<long long> radii, JitterSpec jitter)
        : center_(std::move(center)), radii_(std::move(radii)), jitter_(std::move(jitter)) {
        if (center_.empty() || center_.size() != radii_.size() ||
            center_.size() != jitter_.amplitudes.size())
            throw std::invalid_argument("NodeSet: dimension mismatch");
        for (std::size_t j = 0; j < center_.size(); ++j) {
            if (radii_[j] < 1)
                throw std::invalid_argument("NodeSet: radii must be positive");
            const double m = jitter_.amplitudes[j];
            if (!(m >= 0.0) || m >= 0.5)
                throw std::invalid_argument(
                    "NodeSet: jitter amplitude must lie in [0, 1/2), got M=" + std::to_string(m));
        }
    }

    int dimension() const { return static_cast<int>(center_.size()); }
    const std::vector<double>& center() const { return center_; }
    const std::vector<long long>& radii() const { return radii_; }
    const JitterSpec& jitter() const { return jitter_; }

    IndexRange window(int axis) const {
        return axis_window(center_[static_cast<std::size_t>(axis)],
                           radii_[static_cast<std::size_t>(axis)]);
    }

    bool in_window(int axis, long long n) const {
        const IndexRange r = window(axis);
        return n >= r.lo && n <= r.hi;
    }

    double node(int axis, long long n) const {
        if (!in_window(axis, n)) return static_cast<double>(n);
        return static_cast<double>(n) + jitter_.offset(axis, n);
    }

    std::vector<double> node(const std::vector<long long>& n) const {
        std::vector<double> t(n.size());
        for (std::size_t j = 0; j < n.size(); ++j)
            t[j] = node(static_cast<int>(j), n[j]);
        return t;
    }

    /// Per-axis infimum gap over realized nodes; >= 1 - 2 M_j by construction.
    std::vector<double> separation() const {
        std::vector<double> delta(center_.size());
        for (int axis = 0; axis < dimension(); ++axis) {
            const IndexRange r = window(axis);
            double gap = 1.0; // lattice gap realized infinitely often outside
            double prev = node(axis, r.lo - 1);
            for (long long n = r.lo; n <= r.hi + 1; ++n) {
                const double t = node(axis, n);
                gap = std::min(gap, t - prev);
                prev = t;
            }
            delta[static_cast<std::size_t>(axis)] = gap;
        }
        return delta;
    }

private:
    std::vector<double> center_;
    std::vector<long long> radii_;
    JitterSpec jitter_;
};

inline NodeSet build_nodes(const std::vector<double>& center,
                           const std::vector<long long>& radii,
                           const JitterSpec& jitter) {
    return NodeSet(center, radii, jitter);
}

enum class AdmissibilityMode { expansion, convergence };

/// Jitter amplitude admissibility. `expansion` guards the sampling expansion
/// itself, `convergence` additionally guarantees the truncation bound
/// vanishes as the window grows.
inline bool admissible(double m_tilde, double q, int d, AdmissibilityMode mode) {
    if (q < 1.0) throw std::invalid_argument("admissible: q must be >= 1");
    if (d < 1) throw std::invalid_argument("admissible: d must be positive");
    if (m_tilde < 0.0) return false;
    switch (mode) {
        case AdmissibilityMode::expansion:
            if (q == 1.0) return m_tilde <= 0.25;
            return m_tilde < 0.25 / q;
        case AdmissibilityMode::convergence:
            if (q == 1.0 && d == 1) return m_tilde <= 0.25;
            return m_tilde < std::min(1.0 / (4.0 * q), 1.0 / ((4.0 * d - 1.0) * q));
    }
    return false;
}

} // namespace winsamp

#endif
