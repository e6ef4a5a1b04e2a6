#ifndef FITSIM_NUMERIC_HPP
#define FITSIM_NUMERIC_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>

namespace fitsim {

/// Neumaier-compensated accumulator. All aggregations in the simulator go
/// through this so that results are reproducible bit-for-bit for a fixed
/// iteration order.
class NeumaierSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
    NeumaierSum s;
    for (double x : xs) s.add(x);
    return s.value();
}

/// Mean of a span; empty input yields NaN (undefined, never silently zero).
inline double mean(std::span<const double> xs) {
    if (xs.empty()) return std::numeric_limits<double>::quiet_NaN();
    return compensated_sum(xs) / static_cast<double>(xs.size());
}

inline double max_abs_difference(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = std::abs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

/// Pearson correlation coefficient; empty for mismatched/short input or when
/// either series has zero variance.
std::optional<double> pearson_correlation(std::span<const double> x,
                                          std::span<const double> y);

} // namespace fitsim

#endif // FITSIM_NUMERIC_HPP
