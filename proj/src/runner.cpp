#include "fitsim/runner.hpp"

#include "fitsim/io.hpp"
#include "fitsim/parallel.hpp"
#include "fitsim/rng.hpp"
#include "fitsim/version.hpp"

#include "json.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fitsim {

namespace {

using nlohmann::json;

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

json graph_spec_json(const GraphSpec& spec) {
    json j{{"family", std::string(to_string(spec.family))},
           {"nodes", spec.n},
           {"target_avg_degree", spec.target_avg_degree},
           {"seed", spec.seed}};
    if (spec.family == GraphFamily::ErdosRenyiWithAuxiliary) j["aux_count"] = spec.aux_count;
    if (spec.family == GraphFamily::EdgeListFile) j["path"] = spec.path;
    return j;
}

json sim_config_json(const std::string& drf_spec, int max_steps, double epsilon,
                     double activity_threshold) {
    return json{{"drf", drf_spec},
                {"max_steps", max_steps},
                {"convergence_epsilon", epsilon},
                {"activity_threshold", activity_threshold}};
}

json manifest_skeleton(const std::string& command) {
    return json{{"tool", "fitsim"},
                {"version", kVersion},
                {"command", command},
                {"schema", json{{"trajectory_csv", kCsvSchemaVersion},
                                {"node_csv", kCsvSchemaVersion},
                                {"sweep_csv", kCsvSchemaVersion},
                                {"suite_summary_csv", kCsvSchemaVersion}}},
                {"created_utc", utc_timestamp()}};
}

/// Filesystem-safe form of a drf spec string (':' becomes '-').
std::string drf_slug(const std::string& spec) {
    std::string slug = spec;
    for (char& c : slug)
        if (c == ':') c = '-';
    return slug;
}

struct SuiteNetwork {
    std::string label;
    GraphSpec spec;
};

std::vector<SuiteNetwork> suite_networks(const SuiteOptions& opts) {
    std::vector<SuiteNetwork> nets;
    auto degree_at = [&](int i, int count) {
        if (count <= 1) return opts.min_avg_degree;
        return opts.min_avg_degree + (opts.max_avg_degree - opts.min_avg_degree) *
                                         static_cast<double>(i) / static_cast<double>(count - 1);
    };
    for (int i = 0; i < opts.er_count; ++i) {
        GraphSpec spec;
        spec.family = GraphFamily::ErdosRenyi;
        spec.n = opts.nodes;
        spec.target_avg_degree = degree_at(i, opts.er_count);
        spec.seed = suite_network_seed(opts.master_seed, GraphFamily::ErdosRenyi, i);
        char label[16];
        std::snprintf(label, sizeof(label), "er%02d", i);
        nets.push_back({label, spec});
    }
    for (int i = 0; i < opts.ba_count; ++i) {
        GraphSpec spec;
        spec.family = GraphFamily::BarabasiAlbert;
        spec.n = opts.nodes;
        spec.target_avg_degree = degree_at(i, opts.ba_count);
        spec.seed = suite_network_seed(opts.master_seed, GraphFamily::BarabasiAlbert, i);
        char label[16];
        std::snprintf(label, sizeof(label), "ba%02d", i);
        nets.push_back({label, spec});
    }
    return nets;
}

} // namespace

std::uint64_t suite_network_seed(std::uint64_t master_seed, GraphFamily family, int index) {
    const std::uint64_t stream = family == GraphFamily::ErdosRenyi ? 1 : 2;
    return derive_seed(master_seed, stream, static_cast<std::uint64_t>(index));
}

RunResult run_single(const RunOptions& opts) {
    const auto drf = DisparityResponse::parse(opts.drf_spec);
    const Graph g = generate(opts.graph);

    SimConfig cfg{.drf = drf,
                  .max_steps = opts.max_steps,
                  .convergence_epsilon = opts.convergence_epsilon,
                  .activity_threshold = opts.activity_threshold,
                  .record_node_level = opts.node_level};

    RunResult result{run(g, cfg), {}};

    std::filesystem::create_directories(opts.out_dir);

    std::ostringstream traj;
    write_trajectory_csv(traj, result.trajectory);
    result.trajectory_csv = opts.out_dir / "trajectory.csv";
    write_file(result.trajectory_csv, traj.str());

    std::vector<std::string> outputs{"trajectory.csv", "manifest.json"};
    if (opts.node_level) {
        std::ostringstream nodes;
        write_node_csv(nodes, g, result.trajectory);
        write_file(opts.out_dir / "nodes.csv", nodes.str());
        outputs.insert(outputs.begin() + 1, "nodes.csv");
    }

    json manifest = manifest_skeleton("run");
    manifest["graph"] = graph_spec_json(opts.graph);
    manifest["sim"] = sim_config_json(opts.drf_spec, opts.max_steps, opts.convergence_epsilon,
                                      opts.activity_threshold);
    manifest["seed"] = opts.graph.seed;
    manifest["outputs"] = outputs;
    manifest["result"] = json{{"converged", result.trajectory.converged},
                              {"terminal_step", result.trajectory.terminal_step},
                              {"terminal_mean_rate", result.trajectory.metrics.back().mean_rate},
                              {"terminal_sharer_fraction",
                               result.trajectory.metrics.back().sharer_fraction}};
    write_file(opts.out_dir / "manifest.json", manifest.dump(2) + "\n");
    return result;
}

SuiteResult run_paper_suite(const SuiteOptions& opts) {
    const auto networks = suite_networks(opts);
    const auto instances = standard_instances();
    const std::size_t total = networks.size() * instances.size();

    std::filesystem::create_directories(opts.out_dir);

    // Graphs are generated once per network up front and shared read-only by
    // the workers.
    std::vector<Graph> graphs(networks.size());
    parallel_for(networks.size(), opts.workers,
                 [&](std::size_t i) { graphs[i] = generate(networks[i].spec); });

    struct RunRecord {
        Trajectory traj;
        std::string file_name;
    };
    std::vector<RunRecord> records(total);

    parallel_for(total, opts.workers, [&](std::size_t item) {
        const std::size_t net_index = item / instances.size();
        const std::size_t drf_index = item % instances.size();
        const auto& net = networks[net_index];
        const auto& drf = instances[drf_index];

        SimConfig cfg{.drf = drf,
                      .max_steps = opts.max_steps,
                      .convergence_epsilon = opts.convergence_epsilon,
                      .activity_threshold = 0.0,
                      .record_node_level = false};
        RunRecord& rec = records[item];
        rec.traj = run(graphs[net_index], cfg);
        rec.file_name = net.label + "_" + drf_slug(drf.spec_string()) + ".csv";

        std::ostringstream csv;
        write_trajectory_csv(csv, rec.traj);
        write_file(opts.out_dir / rec.file_name, csv.str());
    });

    // Summary rows in deterministic (network, drf) order.
    std::ostringstream summary;
    summary << kSuiteSummaryHeader << "\n";
    for (std::size_t item = 0; item < total; ++item) {
        const auto& net = networks[item / instances.size()];
        const auto& drf = instances[item % instances.size()];
        const auto& traj = records[item].traj;
        summary << net.label << ',' << to_string(net.spec.family) << ',' << net.spec.n << ','
                << format_double(net.spec.target_avg_degree) << ',' << net.spec.seed << ','
                << drf.spec_string() << ',' << (traj.converged ? 1 : 0) << ','
                << traj.terminal_step << ',' << format_double(traj.metrics.back().mean_rate)
                << ',' << format_double(traj.metrics.back().sharer_fraction) << "\n";
    }

    SuiteResult result;
    result.runs = total;
    result.summary_csv = opts.out_dir / "summary.csv";
    write_file(result.summary_csv, summary.str());

    json manifest = manifest_skeleton("suite");
    manifest["master_seed"] = opts.master_seed;
    manifest["sim"] = sim_config_json("standard-instances", opts.max_steps,
                                      opts.convergence_epsilon, 0.0);
    json nets = json::array();
    for (const auto& net : networks) {
        json j = graph_spec_json(net.spec);
        j["label"] = net.label;
        nets.push_back(j);
    }
    manifest["networks"] = nets;
    json drfs = json::array();
    for (const auto& drf : instances) drfs.push_back(drf.spec_string());
    manifest["drf_instances"] = drfs;
    manifest["runs"] = total;
    write_file(opts.out_dir / "manifest.json", manifest.dump(2) + "\n");
    return result;
}

SweepResult run_sweep(const SweepOptions& opts) {
    if (opts.disparity_thresholds.empty() || opts.activity_thresholds.empty())
        throw std::invalid_argument("sweep grids must be non-empty");

    SimConfig cfg{.drf = DisparityResponse::negative_step(1.0),
                  .max_steps = opts.max_steps,
                  .convergence_epsilon = opts.convergence_epsilon,
                  .activity_threshold = 0.0,
                  .record_node_level = false};

    SweepResult result;
    result.grid = threshold_sweep(opts.graph, opts.disparity_thresholds,
                                  opts.activity_thresholds, opts.realizations, cfg,
                                  opts.workers);

    std::filesystem::create_directories(opts.out_dir);
    std::ostringstream csv;
    write_sweep_csv(csv, result.grid);
    result.sweep_csv = opts.out_dir / "sweep.csv";
    write_file(result.sweep_csv, csv.str());

    json manifest = manifest_skeleton("sweep");
    manifest["graph"] = graph_spec_json(opts.graph);
    manifest["master_seed"] = opts.graph.seed;
    manifest["disparity_thresholds"] = opts.disparity_thresholds;
    manifest["activity_thresholds"] = opts.activity_thresholds;
    manifest["realizations"] = opts.realizations;
    manifest["sim"] = json{{"max_steps", opts.max_steps},
                           {"convergence_epsilon", opts.convergence_epsilon}};
    manifest["seed_rule"] =
        "realization seed = derive_seed(master_seed, cell_index, realization); "
        "cell_index = z_index * |activity_grid| + a_index";
    write_file(opts.out_dir / "manifest.json", manifest.dump(2) + "\n");
    return result;
}

} // namespace fitsim
