// Command-line front end: single runs, the replication suite, threshold
// sweeps, and export of the embedded Florentine dataset.

#include "fitsim/io.hpp"
#include "fitsim/runner.hpp"
#include "fitsim/version.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

namespace {

struct NetworkFlags {
    std::string network = "er";
    std::uint32_t nodes = 3000;
    double avg_degree = 20.0;
    double edge_prob = -1.0; // alternative to avg_degree for er / er-aux
    std::uint32_t aux_count = 10;
    std::string edge_file;
};

void add_network_flags(CLI::App* cmd, NetworkFlags& flags) {
    cmd->add_option("--network", flags.network, "Network family: er|ba|er-aux|ffn|file")
        ->check(CLI::IsMember({"er", "ba", "er-aux", "ffn", "file"}));
    cmd->add_option("--nodes", flags.nodes, "Node count (generated families)");
    cmd->add_option("--avg-degree", flags.avg_degree, "Target average degree");
    cmd->add_option("--edge-prob", flags.edge_prob,
                    "Edge probability for er / er-aux (overrides --avg-degree)");
    cmd->add_option("--aux-count", flags.aux_count, "Auxiliary node count for er-aux");
    cmd->add_option("--edge-file", flags.edge_file, "Edge list path for --network file");
}

fitsim::GraphSpec make_graph_spec(const NetworkFlags& flags, std::uint64_t seed) {
    const auto family = fitsim::parse_graph_family(flags.network);
    if (!family) throw CLI::ValidationError("--network", "unknown family: " + flags.network);

    fitsim::GraphSpec spec;
    spec.family = *family;
    spec.n = flags.nodes;
    spec.seed = seed;
    spec.aux_count = flags.aux_count;
    spec.path = flags.edge_file;
    spec.target_avg_degree = flags.avg_degree;
    if (flags.edge_prob >= 0.0) {
        if (*family != fitsim::GraphFamily::ErdosRenyi &&
            *family != fitsim::GraphFamily::ErdosRenyiWithAuxiliary)
            throw CLI::ValidationError("--edge-prob", "only valid for er / er-aux networks");
        spec.target_avg_degree = flags.edge_prob * static_cast<double>(flags.nodes - 1);
    }
    if (*family == fitsim::GraphFamily::EdgeListFile && flags.edge_file.empty())
        throw CLI::ValidationError("--edge-file", "required for --network file");
    return spec;
}

std::vector<double> default_disparity_grid() {
    std::vector<double> grid;
    for (int i = 0; i < 21; ++i) grid.push_back((500.0 + 105.0 * i) / 1000.0);
    return grid;
}

std::vector<double> default_activity_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) grid.push_back(static_cast<double>(i) * 0.05);
    return grid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fitsim: feedback-disparity sharing dynamics on networks"};
    app.set_version_flag("--version", std::string("fitsim ") + fitsim::kVersion);
    app.require_subcommand(1);

    const int hw_workers =
        std::max(1u, std::thread::hardware_concurrency() ? std::thread::hardware_concurrency() : 1u);

    // --- run ---------------------------------------------------------------
    auto* run_cmd = app.add_subcommand("run", "Run a single simulation");
    NetworkFlags run_net;
    add_network_flags(run_cmd, run_net);
    std::string run_drf = "neg-step:1.5";
    double run_activity = 0.0;
    int run_max_steps = 52;
    double run_epsilon = 1e-9;
    std::uint64_t run_seed = 1;
    std::string run_out = "out";
    bool run_node_level = false;
    run_cmd->add_option("--drf", run_drf,
                        "Disparity response, e.g. neg-step:1.5, pos-step:1, linear:1.55, "
                        "inverse, convex:10");
    run_cmd->add_option("--activity-threshold", run_activity,
                        "Minimum sharing-neighbor fraction to keep sharing")
        ->check(CLI::Range(0.0, 1.0));
    run_cmd->add_option("--max-steps", run_max_steps, "Step cap")->check(CLI::PositiveNumber);
    run_cmd->add_option("--epsilon", run_epsilon, "Convergence tolerance (max-norm)");
    run_cmd->add_option("--seed", run_seed, "Graph seed");
    run_cmd->add_option("--out", run_out, "Output directory");
    run_cmd->add_flag("--node-level", run_node_level, "Also write nodes.csv");

    // --- suite -------------------------------------------------------------
    auto* suite_cmd = app.add_subcommand(
        "suite", "Run the full replication suite (ER + BA networks x standard responses)");
    fitsim::SuiteOptions suite_opts;
    suite_opts.workers = hw_workers;
    std::string suite_out = "out";
    suite_cmd->add_option("--nodes", suite_opts.nodes, "Node count per network");
    suite_cmd->add_option("--er-count", suite_opts.er_count, "Number of ER networks");
    suite_cmd->add_option("--ba-count", suite_opts.ba_count, "Number of BA networks");
    suite_cmd->add_option("--min-avg-degree", suite_opts.min_avg_degree, "Smallest average degree");
    suite_cmd->add_option("--max-avg-degree", suite_opts.max_avg_degree, "Largest average degree");
    suite_cmd->add_option("--max-steps", suite_opts.max_steps, "Step cap");
    suite_cmd->add_option("--epsilon", suite_opts.convergence_epsilon, "Convergence tolerance");
    suite_cmd->add_option("--seed", suite_opts.master_seed, "Master seed");
    suite_cmd->add_option("--workers", suite_opts.workers, "Worker thread count");
    suite_cmd->add_option("--out", suite_out, "Output directory");

    // --- sweep -------------------------------------------------------------
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Sweep disparity x activity thresholds over fresh graphs");
    NetworkFlags sweep_net;
    sweep_net.network = "er-aux";
    sweep_net.nodes = 1000;
    sweep_net.edge_prob = 0.01;
    add_network_flags(sweep_cmd, sweep_net);
    std::vector<double> z_grid, a_grid;
    fitsim::SweepOptions sweep_opts;
    sweep_opts.workers = hw_workers;
    std::string sweep_out = "out";
    std::uint64_t sweep_seed = 1;
    sweep_cmd->add_option("--disparity-thresholds", z_grid,
                          "Disparity thresholds (default: the 21-value standard grid)")
        ->delimiter(',');
    sweep_cmd->add_option("--activity-thresholds", a_grid,
                          "Activity thresholds (default: 0 to 0.5 step 0.05)")
        ->delimiter(',');
    sweep_cmd->add_option("--realizations", sweep_opts.realizations, "Graphs per cell")
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--max-steps", sweep_opts.max_steps, "Step cap");
    sweep_cmd->add_option("--epsilon", sweep_opts.convergence_epsilon, "Convergence tolerance");
    sweep_cmd->add_option("--seed", sweep_seed, "Master seed");
    sweep_cmd->add_option("--workers", sweep_opts.workers, "Worker thread count");
    sweep_cmd->add_option("--out", sweep_out, "Output directory");

    // --- export-ffn ----------------------------------------------------------
    auto* export_cmd =
        app.add_subcommand("export-ffn", "Write the embedded Florentine families edge list");
    std::string export_path;
    export_cmd->add_option("--out", export_path, "Output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            fitsim::RunOptions opts;
            opts.graph = make_graph_spec(run_net, run_seed);
            opts.drf_spec = run_drf;
            opts.activity_threshold = run_activity;
            opts.max_steps = run_max_steps;
            opts.convergence_epsilon = run_epsilon;
            opts.node_level = run_node_level;
            opts.out_dir = run_out;
            const auto result = fitsim::run_single(opts);
            std::cout << "wrote " << result.trajectory_csv.string() << " ("
                      << result.trajectory.metrics.size() << " steps, "
                      << (result.trajectory.converged ? "converged" : "step cap reached")
                      << ")\n";
        } else if (suite_cmd->parsed()) {
            suite_opts.out_dir = suite_out;
            const auto result = fitsim::run_paper_suite(suite_opts);
            std::cout << "wrote " << result.summary_csv.string() << " (" << result.runs
                      << " runs)\n";
        } else if (sweep_cmd->parsed()) {
            sweep_opts.graph = make_graph_spec(sweep_net, sweep_seed);
            sweep_opts.disparity_thresholds = z_grid.empty() ? default_disparity_grid() : z_grid;
            sweep_opts.activity_thresholds = a_grid.empty() ? default_activity_grid() : a_grid;
            sweep_opts.out_dir = sweep_out;
            const auto result = fitsim::run_sweep(sweep_opts);
            std::cout << "wrote " << result.sweep_csv.string() << " ("
                      << result.grid.cells.size() << " cells)\n";
        } else if (export_cmd->parsed()) {
            const auto g = fitsim::florentine_families();
            if (export_path.empty()) {
                fitsim::write_edge_list(std::cout, g, fitsim::florentine_family_names());
            } else {
                std::ofstream out(export_path, std::ios::binary);
                if (!out) throw std::runtime_error("cannot open output file: " + export_path);
                fitsim::write_edge_list(out, g, fitsim::florentine_family_names());
                std::cout << "wrote " << export_path << "\n";
            }
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
