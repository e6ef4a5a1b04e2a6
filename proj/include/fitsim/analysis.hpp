#ifndef FITSIM_ANALYSIS_HPP
#define FITSIM_ANALYSIS_HPP

#include "fitsim/engine.hpp"
#include "fitsim/graph.hpp"
#include "fitsim/metrics.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fitsim {

/// Aggregates for the transition prev -> cur. For the initial snapshot pass
/// the same state twice; the movement fractions are then zero.
StepMetrics step_metrics(const Graph& g, const SimState& prev, const SimState& cur);

/// Two disparity series over a recorded trajectory: the shrinking-population
/// network mean (the mean_disparity column) and the mean over the fixed
/// cohort of nodes still sharing at the end. The first tends to fall as
/// high-disparity nodes churn out of it even while the survivors' own
/// disparities rise.
struct SurvivorBiasReport {
    std::vector<double> network_mean_disparity;
    std::vector<double> survivor_mean_disparity;
    bool network_non_increasing_after_step1 = false;
    bool survivor_non_decreasing = false;
};

/// Requires a trajectory recorded with record_node_level.
SurvivorBiasReport survivor_bias_check(const Graph& g, const Trajectory& traj);

/// Pearson correlation between each node's local paradox and its terminal
/// sharing step, over nodes with a defined local paradox. Empty when either
/// series has zero variance.
std::optional<double> terminal_correlation(const Graph& g, const Trajectory& traj);

/// Rows are local-paradox buckets of the given width; columns are simulation
/// steps 0..terminal_step; each cell is the fraction of the bucket's nodes
/// whose terminal sharing step is that column. Rows sum to 1; empty buckets
/// are omitted.
struct ParadoxTerminalHeatmap {
    double bucket_width = 0.1;
    std::vector<double> bucket_lower_edges;
    std::vector<std::size_t> bucket_counts;
    std::vector<std::vector<double>> rows;
};

ParadoxTerminalHeatmap paradox_terminal_heatmap(const Graph& g, const Trajectory& traj,
                                                double bucket_width = 0.1);

/// Terminal sharer fractions over a (disparity threshold x activity
/// threshold) grid, averaged over independently generated graphs.
struct SweepGrid {
    std::vector<double> disparity_thresholds;
    std::vector<double> activity_thresholds;
    struct Cell {
        double mean_terminal_fraction = 0.0;
        double stddev = 0.0;
    };
    std::vector<Cell> cells; // row-major: [z_index * |a| + a_index]
    int realizations = 0;

    const Cell& at(std::size_t z_index, std::size_t a_index) const {
        return cells[z_index * activity_thresholds.size() + a_index];
    }
};

/// For every cell, generates `realizations` fresh graphs from the spec
/// (realization seeds derived from spec.seed and the cell/realization
/// indices), runs a negative-step simulation at the cell's disparity
/// threshold with the cell's activity threshold, and records the mean and
/// population standard deviation of the terminal sharer fraction.
/// cfg supplies max_steps and convergence_epsilon; its drf and
/// activity_threshold are replaced per cell. Deterministic for a fixed
/// spec.seed regardless of worker count.
SweepGrid threshold_sweep(const GraphSpec& spec, std::span<const double> disparity_grid,
                          std::span<const double> activity_grid, int realizations,
                          const SimConfig& cfg, int workers = 1);

/// Seed used for one sweep realization; exposed so that any single cell can
/// be reproduced in isolation.
std::uint64_t sweep_realization_seed(std::uint64_t master_seed, std::size_t cell_index,
                                     int realization);

} // namespace fitsim

#endif // FITSIM_ANALYSIS_HPP
