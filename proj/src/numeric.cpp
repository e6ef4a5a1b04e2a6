#include "fitsim/numeric.hpp"

namespace fitsim {

std::optional<double> pearson_correlation(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) return std::nullopt;
    const double mx = mean(x);
    const double my = mean(y);
    NeumaierSum cov, vx, vy;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        cov.add(dx * dy);
        vx.add(dx * dx);
        vy.add(dy * dy);
    }
    if (vx.value() <= 0.0 || vy.value() <= 0.0) return std::nullopt;
    return cov.value() / std::sqrt(vx.value() * vy.value());
}

} // namespace fitsim
