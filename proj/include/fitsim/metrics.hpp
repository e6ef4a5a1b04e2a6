#ifndef FITSIM_METRICS_HPP
#define FITSIM_METRICS_HPP

namespace fitsim {

/// Per-step aggregates of one simulation snapshot.
///
/// Population rules: mean_wlp averages the weighted local paradox over every
/// node with at least one sharing neighbor; mean_disparity averages the same
/// quantity over the subset of those nodes that are themselves sharing.
/// Undefined values are excluded from the averages, never counted as zero.
/// frac_disparity_up / _down count sharers whose disparity moved against the
/// previous step (strictly, beyond a 1e-12 jitter guard), as a fraction of
/// sharers with a defined disparity at both steps.
struct StepMetrics {
    int step = 0;
    double mean_rate = 0.0;
    double sharer_fraction = 0.0;
    double mean_wlp = 0.0;
    double mean_disparity = 0.0;
    double frac_disparity_up = 0.0;
    double frac_disparity_down = 0.0;
};

} // namespace fitsim

#endif // FITSIM_METRICS_HPP
