#ifndef FITSIM_ENGINE_HPP
#define FITSIM_ENGINE_HPP

#include "fitsim/drf.hpp"
#include "fitsim/graph.hpp"
#include "fitsim/metrics.hpp"
#include "fitsim/paradox.hpp"

#include <cstdint>
#include <vector>

namespace fitsim {

struct SimConfig {
    DisparityResponse drf;
    int max_steps = 52;
    double convergence_epsilon = 1e-9;
    /// Minimum fraction of a node's neighbors that must be sharing for the
    /// node to keep sharing. Strict-below comparison, so 0 disables the rule.
    double activity_threshold = 0.0;
    /// Keep per-step per-node rate snapshots on the trajectory.
    bool record_node_level = false;
};

struct SimState {
    int t = 0;
    RateVector rates;
    RateVector baseline;
    std::vector<std::uint8_t> churned; // rate hit zero at some past step; permanent
};

struct Trajectory {
    std::vector<StepMetrics> metrics; // one row per step, 0..terminal_step
    int terminal_step = 0;
    bool converged = false;
    /// Last step at which each node's rate was positive; nodes still sharing
    /// at the end carry the final step index.
    std::vector<int> terminal_sharing_step;
    RateVector final_rates;
    /// Per-step rate snapshots; populated when SimConfig::record_node_level.
    std::vector<RateVector> rate_history;
};

/// All nodes start sharing at rate 1 with no churn.
SimState init(const Graph& g, const SimConfig& cfg);

/// One synchronous update from the time-t snapshot:
///   - a churned node stays at rate 0;
///   - a sharer with no sharing neighbor keeps its baseline rate (isolated
///     nodes always fall here);
///   - otherwise the new rate is drf(disparity) times the baseline.
/// When the activity threshold is positive, a sharer whose fraction of
/// sharing neighbors falls strictly below it is set to 0 regardless of the
/// disparity rule (isolated nodes, having no neighbor fraction, are exempt).
/// Any node whose new rate is 0 is churned permanently.
SimState step(const Graph& g, const SimState& s, const SimConfig& cfg);

/// Repeats step() until the max-norm rate change is at most
/// convergence_epsilon or max_steps is reached, recording metrics per step.
/// The convergence check starts with the transition out of step 1 so the
/// always-permitted first-step jump can never mask it. Fractional rates are
/// carried exactly, never discretized.
Trajectory run(const Graph& g, const SimConfig& cfg);

} // namespace fitsim

#endif // FITSIM_ENGINE_HPP
