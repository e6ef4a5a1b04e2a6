#ifndef FITSIM_RUNNER_HPP
#define FITSIM_RUNNER_HPP

#include "fitsim/analysis.hpp"
#include "fitsim/engine.hpp"
#include "fitsim/graph.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace fitsim {

/// One simulation: writes trajectory.csv, optionally nodes.csv, and
/// manifest.json into out_dir.
struct RunOptions {
    GraphSpec graph;
    std::string drf_spec = "neg-step:1.5";
    double activity_threshold = 0.0;
    int max_steps = 52;
    double convergence_epsilon = 1e-9;
    bool node_level = false;
    std::filesystem::path out_dir = "out";
};

struct RunResult {
    Trajectory trajectory;
    std::filesystem::path trajectory_csv;
};

RunResult run_single(const RunOptions& opts);

/// The replication suite: er_count Erdos-Renyi plus ba_count
/// Barabasi-Albert networks with target average degrees evenly spaced over
/// [min_avg_degree, max_avg_degree], each simulated under every standard
/// response instance. Writes one trajectory CSV per (network, drf) pair, a
/// summary.csv, and manifest.json. Network seeds derive from master_seed;
/// outputs are byte-identical for any worker count.
struct SuiteOptions {
    NodeId nodes = 3000;
    int er_count = 10;
    int ba_count = 10;
    double min_avg_degree = 20.0;
    double max_avg_degree = 200.0;
    int max_steps = 52;
    double convergence_epsilon = 1e-9;
    std::uint64_t master_seed = 1;
    int workers = 1;
    std::filesystem::path out_dir = "out";
};

struct SuiteResult {
    std::size_t runs = 0;
    std::filesystem::path summary_csv;
};

SuiteResult run_paper_suite(const SuiteOptions& opts);

/// Threshold sweep over (disparity, activity) grids; writes sweep.csv and
/// manifest.json.
struct SweepOptions {
    GraphSpec graph; // seed acts as the sweep's master seed
    std::vector<double> disparity_thresholds;
    std::vector<double> activity_thresholds;
    int realizations = 50;
    int max_steps = 52;
    double convergence_epsilon = 1e-9;
    int workers = 1;
    std::filesystem::path out_dir = "out";
};

struct SweepResult {
    SweepGrid grid;
    std::filesystem::path sweep_csv;
};

SweepResult run_sweep(const SweepOptions& opts);

/// Seed streams used by the suite, exposed for reproduction of a single run.
std::uint64_t suite_network_seed(std::uint64_t master_seed, GraphFamily family, int index);

} // namespace fitsim

#endif // FITSIM_RUNNER_HPP
