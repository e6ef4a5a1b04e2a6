#include "fitsim/engine.hpp"

#include "fitsim/analysis.hpp"
#include "fitsim/numeric.hpp"

#include <cassert>
#include <stdexcept>

namespace fitsim {

SimState init(const Graph& g, const SimConfig& cfg) {
    (void)cfg;
    const NodeId n = g.node_count();
    SimState s;
    s.t = 0;
    s.rates.assign(n, 1.0);
    s.baseline.assign(n, 1.0);
    s.churned.assign(n, 0);
    return s;
}

SimState step(const Graph& g, const SimState& s, const SimConfig& cfg) {
    const NodeId n = g.node_count();
    if (s.rates.size() != n || s.baseline.size() != n || s.churned.size() != n)
        throw std::invalid_argument("state does not match graph");

    SimState next;
    next.t = s.t + 1;
    next.baseline = s.baseline;
    next.rates.assign(n, 0.0);
    next.churned.assign(n, 0);

    // Every node is updated from the same time-t snapshot, so evaluation
    // order cannot influence the result.
    for (NodeId u = 0; u < n; ++u) {
        if (s.rates[u] <= 0.0) {
            next.rates[u] = 0.0;
            next.churned[u] = 1;
            continue;
        }

        const auto nb = g.neighbors(u);
        double rate;
        if (nb.empty()) {
            // No neighbors: keeps the baseline forever, and the activity
            // rule has no neighbor fraction to evaluate.
            next.rates[u] = s.baseline[u];
            continue;
        }

        NeumaierSum rate_sum, rate_degree_sum;
        std::size_t sharing = 0;
        for (NodeId v : nb) {
            const double r = s.rates[v];
            if (r > 0.0) ++sharing;
            rate_sum.add(r);
            rate_degree_sum.add(r * static_cast<double>(g.degree(v)));
        }

        if (sharing == 0) {
            rate = s.baseline[u];
        } else {
            const double disparity =
                rate_degree_sum.value() / rate_sum.value() / static_cast<double>(g.degree(u));
            rate = cfg.drf(disparity) * s.baseline[u];
        }

        if (cfg.activity_threshold > 0.0 &&
            static_cast<double>(sharing) / static_cast<double>(nb.size()) <
                cfg.activity_threshold)
            rate = 0.0;

        next.rates[u] = rate;
        if (rate <= 0.0) {
            next.rates[u] = 0.0;
            next.churned[u] = 1;
        }
    }
    return next;
}

Trajectory run(const Graph& g, const SimConfig& cfg) {
    if (cfg.max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
    if (cfg.convergence_epsilon < 0.0)
        throw std::invalid_argument("convergence_epsilon must be >= 0");
    if (cfg.activity_threshold < 0.0 || cfg.activity_threshold > 1.0)
        throw std::invalid_argument("activity_threshold must be in [0, 1]");

    const NodeId n = g.node_count();
    SimState state = init(g, cfg);

    Trajectory traj;
    traj.metrics.push_back(step_metrics(g, state, state));
    traj.terminal_sharing_step.assign(n, 0);
    if (cfg.record_node_level) traj.rate_history.push_back(state.rates);

    while (state.t < cfg.max_steps) {
        SimState next = step(g, state, cfg);
        const double delta = max_abs_difference(next.rates, state.rates);
        if (state.t >= 1 && delta <= cfg.convergence_epsilon) {
            traj.converged = true;
            break;
        }
        traj.metrics.push_back(step_metrics(g, state, next));
        state = std::move(next);
        for (NodeId u = 0; u < n; ++u)
            if (state.rates[u] > 0.0) traj.terminal_sharing_step[u] = state.t;
        if (cfg.record_node_level) traj.rate_history.push_back(state.rates);
    }

    traj.terminal_step = state.t;
    traj.final_rates = std::move(state.rates);
    assert(traj.metrics.size() == static_cast<std::size_t>(traj.terminal_step) + 1);
    return traj;
}

} // namespace fitsim
