#ifndef WINSAMP_STABLE_SUM_HPP
#define WINSAMP_STABLE_SUM_HPP

#include <cmath>

namespace winsamp {

/// Neumaier-compensated accumulator. Summation order still matters for
/// bit-reproducibility, so callers iterate in a fixed (lexicographic) order.
class StableSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }

    StableSum& operator+=(double v) {
        add(v);
        return *this;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace winsamp

#endif
