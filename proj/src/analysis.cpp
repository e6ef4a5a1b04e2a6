#include "fitsim/analysis.hpp"

#include "fitsim/numeric.hpp"
#include "fitsim/parallel.hpp"
#include "fitsim/paradox.hpp"
#include "fitsim/rng.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace fitsim {

namespace {

constexpr double kMovementTolerance = 1e-12;

std::vector<std::optional<double>> wlp_all(const Graph& g, std::span<const double> rates) {
    std::vector<std::optional<double>> out(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u)
        out[u] = weighted_local_paradox(g, rates, u);
    return out;
}

} // namespace

StepMetrics step_metrics(const Graph& g, const SimState& prev, const SimState& cur) {
    const NodeId n = g.node_count();
    StepMetrics m;
    m.step = cur.t;

    m.mean_rate = mean(cur.rates);
    std::size_t sharers = 0;
    for (double r : cur.rates)
        if (r > 0.0) ++sharers;
    m.sharer_fraction = n == 0 ? std::numeric_limits<double>::quiet_NaN()
                               : static_cast<double>(sharers) / static_cast<double>(n);

    const auto wlp_prev = wlp_all(g, prev.rates);
    const auto wlp_cur = wlp_all(g, cur.rates);

    NeumaierSum wlp_sum, disparity_sum;
    std::size_t wlp_count = 0, disparity_count = 0;
    std::size_t movers = 0, up = 0, down = 0;
    for (NodeId u = 0; u < n; ++u) {
        if (wlp_cur[u]) {
            wlp_sum.add(*wlp_cur[u]);
            ++wlp_count;
            if (cur.rates[u] > 0.0) {
                disparity_sum.add(*wlp_cur[u]);
                ++disparity_count;
            }
        }
        // Disparity movement is tracked for sharers whose disparity is
        // defined on both sides of the transition.
        if (cur.rates[u] > 0.0 && wlp_cur[u] && wlp_prev[u]) {
            ++movers;
            if (*wlp_cur[u] > *wlp_prev[u] + kMovementTolerance) ++up;
            else if (*wlp_cur[u] < *wlp_prev[u] - kMovementTolerance) ++down;
        }
    }
    assert(disparity_count <= wlp_count);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    m.mean_wlp = wlp_count ? wlp_sum.value() / static_cast<double>(wlp_count) : nan;
    m.mean_disparity =
        disparity_count ? disparity_sum.value() / static_cast<double>(disparity_count) : nan;
    m.frac_disparity_up = movers ? static_cast<double>(up) / static_cast<double>(movers) : 0.0;
    m.frac_disparity_down = movers ? static_cast<double>(down) / static_cast<double>(movers) : 0.0;
    return m;
}

SurvivorBiasReport survivor_bias_check(const Graph& g, const Trajectory& traj) {
    if (traj.rate_history.empty())
        throw std::invalid_argument(
            "survivor_bias_check requires a trajectory recorded with record_node_level");

    const NodeId n = g.node_count();
    const auto& final_rates = traj.rate_history.back();

    SurvivorBiasReport report;
    for (const auto& rates : traj.rate_history) {
        NeumaierSum network_sum, survivor_sum;
        std::size_t network_count = 0, survivor_count = 0;
        for (NodeId u = 0; u < n; ++u) {
            const auto z = weighted_local_paradox(g, rates, u);
            if (!z || rates[u] <= 0.0) continue;
            network_sum.add(*z);
            ++network_count;
            if (final_rates[u] > 0.0) {
                survivor_sum.add(*z);
                ++survivor_count;
            }
        }
        const double nan = std::numeric_limits<double>::quiet_NaN();
        report.network_mean_disparity.push_back(
            network_count ? network_sum.value() / static_cast<double>(network_count) : nan);
        report.survivor_mean_disparity.push_back(
            survivor_count ? survivor_sum.value() / static_cast<double>(survivor_count) : nan);
    }

    auto non_increasing = [](std::span<const double> xs, std::size_t from) {
        for (std::size_t i = from + 1; i < xs.size(); ++i) {
            if (std::isnan(xs[i]) || std::isnan(xs[i - 1])) continue;
            if (xs[i] > xs[i - 1] + kMovementTolerance) return false;
        }
        return true;
    };
    auto non_decreasing = [](std::span<const double> xs) {
        for (std::size_t i = 1; i < xs.size(); ++i) {
            if (std::isnan(xs[i]) || std::isnan(xs[i - 1])) continue;
            if (xs[i] < xs[i - 1] - kMovementTolerance) return false;
        }
        return true;
    };
    report.network_non_increasing_after_step1 =
        non_increasing(report.network_mean_disparity,
                       report.network_mean_disparity.size() > 1 ? 1 : 0);
    report.survivor_non_decreasing = non_decreasing(report.survivor_mean_disparity);
    return report;
}

std::optional<double> terminal_correlation(const Graph& g, const Trajectory& traj) {
    const auto profile = local_paradox(g);
    std::vector<double> lp, terminal;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (!profile.defined[u]) continue;
        lp.push_back(profile.local_paradox[u]);
        terminal.push_back(static_cast<double>(traj.terminal_sharing_step[u]));
    }
    return pearson_correlation(lp, terminal);
}

ParadoxTerminalHeatmap paradox_terminal_heatmap(const Graph& g, const Trajectory& traj,
                                                double bucket_width) {
    if (!(bucket_width > 0.0)) throw std::invalid_argument("bucket width must be > 0");

    const auto profile = local_paradox(g);
    const std::size_t columns = static_cast<std::size_t>(traj.terminal_step) + 1;

    std::map<long long, std::vector<std::size_t>> buckets; // bucket index -> per-step counts
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (!profile.defined[u]) continue;
        const auto bucket =
            static_cast<long long>(std::floor(profile.local_paradox[u] / bucket_width));
        auto& counts = buckets[bucket];
        if (counts.empty()) counts.assign(columns, 0);
        counts[static_cast<std::size_t>(traj.terminal_sharing_step[u])]++;
    }

    ParadoxTerminalHeatmap hm;
    hm.bucket_width = bucket_width;
    for (const auto& [bucket, counts] : buckets) {
        std::size_t total = 0;
        for (std::size_t c : counts) total += c;
        std::vector<double> row(columns, 0.0);
        for (std::size_t j = 0; j < columns; ++j)
            row[j] = static_cast<double>(counts[j]) / static_cast<double>(total);
        hm.bucket_lower_edges.push_back(static_cast<double>(bucket) * bucket_width);
        hm.bucket_counts.push_back(total);
        hm.rows.push_back(std::move(row));
    }
    return hm;
}

std::uint64_t sweep_realization_seed(std::uint64_t master_seed, std::size_t cell_index,
                                     int realization) {
    return derive_seed(master_seed, cell_index, static_cast<std::uint64_t>(realization));
}

SweepGrid threshold_sweep(const GraphSpec& spec, std::span<const double> disparity_grid,
                          std::span<const double> activity_grid, int realizations,
                          const SimConfig& cfg, int workers) {
    if (realizations < 1) throw std::invalid_argument("realizations must be >= 1");
    if (disparity_grid.empty() || activity_grid.empty())
        throw std::invalid_argument("sweep grids must be non-empty");

    SweepGrid grid;
    grid.disparity_thresholds.assign(disparity_grid.begin(), disparity_grid.end());
    grid.activity_thresholds.assign(activity_grid.begin(), activity_grid.end());
    grid.realizations = realizations;

    const std::size_t cell_count = disparity_grid.size() * activity_grid.size();
    const std::size_t total = cell_count * static_cast<std::size_t>(realizations);
    std::vector<double> fractions(total, 0.0);

    // Work items are (cell, realization) pairs with pre-derived seeds, so
    // scheduling cannot affect the result.
    parallel_for(total, workers, [&](std::size_t item) {
        const std::size_t cell = item / static_cast<std::size_t>(realizations);
        const int realization = static_cast<int>(item % static_cast<std::size_t>(realizations));
        const std::size_t zi = cell / activity_grid.size();
        const std::size_t ai = cell % activity_grid.size();

        GraphSpec realized = spec;
        realized.seed = sweep_realization_seed(spec.seed, cell, realization);
        const Graph g = generate(realized);

        SimConfig cell_cfg = cfg;
        cell_cfg.drf = DisparityResponse::negative_step(disparity_grid[zi]);
        cell_cfg.activity_threshold = activity_grid[ai];
        cell_cfg.record_node_level = false;

        const Trajectory traj = run(g, cell_cfg);
        fractions[item] = traj.metrics.back().sharer_fraction;
    });

    grid.cells.resize(cell_count);
    for (std::size_t cell = 0; cell < cell_count; ++cell) {
        const auto begin = cell * static_cast<std::size_t>(realizations);
        std::span<const double> xs(fractions.data() + begin,
                                   static_cast<std::size_t>(realizations));
        const double m = mean(xs);
        NeumaierSum var;
        for (double x : xs) var.add((x - m) * (x - m));
        grid.cells[cell].mean_terminal_fraction = m;
        grid.cells[cell].stddev = std::sqrt(var.value() / static_cast<double>(realizations));
    }
    return grid;
}

} // namespace fitsim
