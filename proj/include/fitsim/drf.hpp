#ifndef FITSIM_DRF_HPP
#define FITSIM_DRF_HPP

#include <string>
#include <string_view>
#include <vector>

namespace fitsim {

enum class DrfKind {
    NegativeStep, // 1 while disparity <= threshold, else 0
    PositiveStep, // 0 while disparity <= threshold, else 1
    Linear,       // intercept K, slope -(K - 1), clamped at 0
    Inverse,      // 1 / x
    ConvexExpSum, // (e^(1 - 1.5x) + e^(0.35x - 1)) / (e + 1/e), capped
};

/// A disparity response function: maps a feedback disparity to the
/// multiplier applied to a node's baseline sharing rate.
class DisparityResponse {
public:
    static DisparityResponse negative_step(double threshold);
    static DisparityResponse positive_step(double threshold);
    static DisparityResponse linear(double intercept);
    static DisparityResponse inverse();
    static DisparityResponse convex_exp_sum(double cap);

    /// Evaluates the response at disparity x >= 0. The inverse family
    /// rejects x == 0.
    double operator()(double x) const;

    DrfKind kind() const { return kind_; }
    double param() const { return param_; }

    /// Textual form, e.g. "neg-step:1.5", "pos-step:1", "linear:1.55",
    /// "inverse", "convex:10".
    std::string spec_string() const;
    static DisparityResponse parse(std::string_view spec);

    bool operator==(const DisparityResponse&) const = default;

private:
    DisparityResponse(DrfKind kind, double param) : kind_(kind), param_(param) {}

    DrfKind kind_;
    double param_;
};

/// The standard sweep set: 21 negative-step thresholds evenly spaced over
/// [0.5, 2.6], linear intercepts {1.05, 1.55, 2.05}, the inverse function,
/// the convex exponential sum capped at 10, and a positive step at 1.
std::vector<DisparityResponse> standard_instances();

} // namespace fitsim

#endif // FITSIM_DRF_HPP
