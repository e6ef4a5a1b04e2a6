#include "doctest.h"

#include "fitsim/io.hpp"
#include "fitsim/runner.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

using namespace fitsim;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::size_t line_count(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "fitsim_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

RunOptions ffn_run_options(const fs::path& out) {
    RunOptions opts;
    opts.graph.family = GraphFamily::Florentine;
    opts.drf_spec = "neg-step:1.5";
    opts.node_level = true;
    opts.out_dir = out;
    return opts;
}

} // namespace

TEST_CASE("number formatting is plain decimal with 12 significant digits") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.6) == "0.6");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(-2.5) == "-2.5");
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
}

TEST_CASE("a florentine run writes the expected files") {
    const auto out = fresh_dir("ffn_run");
    const auto result = run_single(ffn_run_options(out));

    CHECK(result.trajectory.converged);
    const std::string traj = slurp(out / "trajectory.csv");
    CHECK(traj.rfind(kTrajectoryHeader, 0) == 0);
    CHECK(line_count(traj) == 4); // header + steps 0..2

    const std::string nodes = slurp(out / "nodes.csv");
    CHECK(nodes.rfind(kNodeHeader, 0) == 0);
    CHECK(line_count(nodes) == 16); // header + 15 families

    const auto manifest = nlohmann::json::parse(slurp(out / "manifest.json"));
    CHECK(manifest["tool"] == "fitsim");
    CHECK(manifest["command"] == "run");
    CHECK(manifest["sim"]["drf"] == "neg-step:1.5");
    CHECK(manifest["graph"]["family"] == "ffn");
    CHECK(manifest["result"]["terminal_step"] == 2);
    CHECK(manifest["schema"]["trajectory_csv"] == kCsvSchemaVersion);
}

TEST_CASE("reruns of the same configuration are byte-identical") {
    const auto out_a = fresh_dir("rerun_a");
    const auto out_b = fresh_dir("rerun_b");

    RunOptions opts;
    opts.graph.family = GraphFamily::ErdosRenyi;
    opts.graph.n = 300;
    opts.graph.target_avg_degree = 12.0;
    opts.graph.seed = 7;
    opts.drf_spec = "linear:1.55";
    opts.node_level = true;

    opts.out_dir = out_a;
    run_single(opts);
    opts.out_dir = out_b;
    run_single(opts);

    CHECK(slurp(out_a / "trajectory.csv") == slurp(out_b / "trajectory.csv"));
    CHECK(slurp(out_a / "nodes.csv") == slurp(out_b / "nodes.csv"));
}

TEST_CASE("golden trajectories stay pinned") {
    const fs::path golden_dir = fs::path(FITSIM_SOURCE_DIR) / "tests" / "golden";

    struct Pinned {
        const char* name;
        RunOptions opts;
    };
    std::vector<Pinned> cases;

    Pinned ffn{"ffn_neg-step-1.5.csv", {}};
    ffn.opts.graph.family = GraphFamily::Florentine;
    ffn.opts.drf_spec = "neg-step:1.5";
    cases.push_back(ffn);

    Pinned er{"er200-deg10-seed7_neg-step-1.csv", {}};
    er.opts.graph.family = GraphFamily::ErdosRenyi;
    er.opts.graph.n = 200;
    er.opts.graph.target_avg_degree = 10.0;
    er.opts.graph.seed = 7;
    er.opts.drf_spec = "neg-step:1";
    cases.push_back(er);

    Pinned ba{"ba200-deg10-seed7_linear-1.55.csv", {}};
    ba.opts.graph.family = GraphFamily::BarabasiAlbert;
    ba.opts.graph.n = 200;
    ba.opts.graph.target_avg_degree = 10.0;
    ba.opts.graph.seed = 7;
    ba.opts.drf_spec = "linear:1.55";
    cases.push_back(ba);

    for (auto& pinned : cases) {
        CAPTURE(pinned.name);
        const auto out = fresh_dir(std::string("golden_") + pinned.name);
        pinned.opts.out_dir = out;
        run_single(pinned.opts);
        CHECK(slurp(out / "trajectory.csv") == slurp(golden_dir / pinned.name));
    }
}

TEST_CASE("the suite summary is worker-count independent") {
    SuiteOptions opts;
    opts.nodes = 150;
    opts.er_count = 2;
    opts.ba_count = 2;
    opts.min_avg_degree = 8.0;
    opts.max_avg_degree = 20.0;
    opts.master_seed = 3;

    const auto out_1 = fresh_dir("suite_w1");
    opts.workers = 1;
    opts.out_dir = out_1;
    const auto result_1 = run_paper_suite(opts);

    const auto out_8 = fresh_dir("suite_w8");
    opts.workers = 8;
    opts.out_dir = out_8;
    const auto result_8 = run_paper_suite(opts);

    CHECK(result_1.runs == 4 * 27);
    const std::string summary = slurp(out_1 / "summary.csv");
    CHECK(summary.rfind(kSuiteSummaryHeader, 0) == 0);
    CHECK(line_count(summary) == 4 * 27 + 1);
    CHECK(summary == slurp(out_8 / "summary.csv"));

    // Spot-check an individual trajectory file across worker counts.
    CHECK(slurp(out_1 / "er00_neg-step-1.55.csv") == slurp(out_8 / "er00_neg-step-1.55.csv"));

    const auto manifest = nlohmann::json::parse(slurp(out_1 / "manifest.json"));
    CHECK(manifest["command"] == "suite");
    CHECK(manifest["networks"].size() == 4);
    CHECK(manifest["drf_instances"].size() == 27);
}

TEST_CASE("sweep output is deterministic and carries the grid") {
    SweepOptions opts;
    opts.graph.family = GraphFamily::ErdosRenyiWithAuxiliary;
    opts.graph.n = 100;
    opts.graph.target_avg_degree = 0.03 * 99.0;
    opts.graph.aux_count = 3;
    opts.graph.seed = 11;
    opts.disparity_thresholds = {1.5, 2.2};
    opts.activity_thresholds = {0.0, 0.25};
    opts.realizations = 5;

    const auto out_a = fresh_dir("sweep_a");
    opts.workers = 1;
    opts.out_dir = out_a;
    run_sweep(opts);

    const auto out_b = fresh_dir("sweep_b");
    opts.workers = 8;
    opts.out_dir = out_b;
    run_sweep(opts);

    const std::string csv = slurp(out_a / "sweep.csv");
    CHECK(csv.rfind(kSweepHeader, 0) == 0);
    CHECK(line_count(csv) == 2 * 2 + 1);
    CHECK(csv == slurp(out_b / "sweep.csv"));

    const auto manifest = nlohmann::json::parse(slurp(out_a / "manifest.json"));
    CHECK(manifest["realizations"] == 5);
    CHECK(manifest["disparity_thresholds"].size() == 2);
}

TEST_CASE("the exported dataset matches the checked-in copy") {
    std::ostringstream exported;
    write_edge_list(exported, florentine_families(), florentine_family_names());
    CHECK(exported.str() == slurp(fs::path(FITSIM_SOURCE_DIR) / "data" / "florentine.edges"));
}

TEST_CASE("unknown drf specs surface as usage errors") {
    RunOptions opts = ffn_run_options(fresh_dir("bad_drf"));
    opts.drf_spec = "gaussian:2";
    CHECK_THROWS_WITH_AS(run_single(opts), doctest::Contains("gaussian"),
                         std::invalid_argument);
}
