#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "fitsim/analysis.hpp"
#include "fitsim/drf.hpp"
#include "fitsim/engine.hpp"
#include "fitsim/graph.hpp"
#include "fitsim/paradox.hpp"
#include "fitsim/runner.hpp"
#include "fitsim/version.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace fitsim;

namespace {

SimConfig make_config(const std::string& drf_spec, int max_steps, double epsilon,
                      double activity_threshold, bool record_node_level) {
    return SimConfig{.drf = DisparityResponse::parse(drf_spec),
                     .max_steps = max_steps,
                     .convergence_epsilon = epsilon,
                     .activity_threshold = activity_threshold,
                     .record_node_level = record_node_level};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Simulator of sharing-rate dynamics driven by feedback disparity on networks";
    m.attr("__version__") = kVersion;

    py::class_<Graph>(m, "Graph")
        .def_static(
            "from_edge_list",
            [](const std::vector<Edge>& edges, NodeId n) {
                return Graph::from_edge_list(edges, n);
            },
            py::arg("edges"), py::arg("n"))
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree, py::arg("u"))
        .def(
            "neighbors",
            [](const Graph& g, NodeId u) {
                auto nb = g.neighbors(u);
                return std::vector<NodeId>(nb.begin(), nb.end());
            },
            py::arg("u"))
        .def("edges", &Graph::edges)
        .def("average_degree", &Graph::average_degree)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph nodes=" + std::to_string(g.node_count()) +
                   " edges=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("erdos_renyi", &generate_erdos_renyi, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("barabasi_albert", &generate_barabasi_albert, py::arg("n"), py::arg("m"),
          py::arg("seed"));
    m.def("er_with_auxiliary", &generate_er_with_auxiliary, py::arg("n"), py::arg("p"),
          py::arg("aux_count"), py::arg("seed"));
    m.def("florentine_families", &florentine_families);
    m.def("florentine_family_names", [] {
        std::vector<std::string> names;
        for (auto name : florentine_family_names()) names.emplace_back(name);
        return names;
    });

    py::class_<ParadoxProfile>(m, "ParadoxProfile")
        .def_readonly("local_paradox", &ParadoxProfile::local_paradox)
        .def_readonly("avg_friend_degree", &ParadoxProfile::avg_friend_degree)
        .def_property_readonly("defined", [](const ParadoxProfile& p) {
            std::vector<bool> mask(p.defined.begin(), p.defined.end());
            return mask;
        });

    m.def("local_paradox", &local_paradox, py::arg("graph"));
    m.def("avg_friend_degree", &avg_friend_degree, py::arg("graph"), py::arg("u"));
    m.def(
        "sharing_bias",
        [](const Graph& g, const std::vector<double>& rates, NodeId u) {
            return sharing_bias(g, rates, u);
        },
        py::arg("graph"), py::arg("rates"), py::arg("u"));
    m.def(
        "weighted_local_paradox",
        [](const Graph& g, const std::vector<double>& rates, NodeId u) {
            return weighted_local_paradox(g, rates, u);
        },
        py::arg("graph"), py::arg("rates"), py::arg("u"));
    m.def(
        "feedback_disparity",
        [](const Graph& g, const std::vector<double>& rates, NodeId u, double k) {
            return feedback_disparity(g, rates, EngagementModel{k}, u);
        },
        py::arg("graph"), py::arg("rates"), py::arg("u"), py::arg("feedback_per_friend") = 1.0);

    m.def(
        "drf_evaluate",
        [](const std::string& spec, double x) { return DisparityResponse::parse(spec)(x); },
        py::arg("spec"), py::arg("x"));
    m.def("standard_instances", [] {
        std::vector<std::string> specs;
        for (const auto& drf : standard_instances()) specs.push_back(drf.spec_string());
        return specs;
    });

    py::class_<StepMetrics>(m, "StepMetrics")
        .def_readonly("step", &StepMetrics::step)
        .def_readonly("mean_rate", &StepMetrics::mean_rate)
        .def_readonly("sharer_fraction", &StepMetrics::sharer_fraction)
        .def_readonly("mean_wlp", &StepMetrics::mean_wlp)
        .def_readonly("mean_disparity", &StepMetrics::mean_disparity)
        .def_readonly("frac_disparity_up", &StepMetrics::frac_disparity_up)
        .def_readonly("frac_disparity_down", &StepMetrics::frac_disparity_down)
        .def("__repr__", [](const StepMetrics& m_) {
            return "<StepMetrics step=" + std::to_string(m_.step) +
                   " mean_rate=" + std::to_string(m_.mean_rate) + ">";
        });

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("metrics", &Trajectory::metrics)
        .def_readonly("terminal_step", &Trajectory::terminal_step)
        .def_readonly("converged", &Trajectory::converged)
        .def_readonly("terminal_sharing_step", &Trajectory::terminal_sharing_step)
        .def_readonly("final_rates", &Trajectory::final_rates)
        .def_readonly("rate_history", &Trajectory::rate_history);

    m.def(
        "simulate",
        [](const Graph& g, const std::string& drf, int max_steps, double epsilon,
           double activity_threshold, bool record_node_level) {
            return run(g, make_config(drf, max_steps, epsilon, activity_threshold,
                                      record_node_level));
        },
        py::arg("graph"), py::arg("drf"), py::arg("max_steps") = 52,
        py::arg("epsilon") = 1e-9, py::arg("activity_threshold") = 0.0,
        py::arg("record_node_level") = false);

    m.def(
        "terminal_correlation",
        [](const Graph& g, const Trajectory& traj) { return terminal_correlation(g, traj); },
        py::arg("graph"), py::arg("trajectory"));

    py::class_<SweepGrid::Cell>(m, "SweepCell")
        .def_readonly("mean_terminal_fraction", &SweepGrid::Cell::mean_terminal_fraction)
        .def_readonly("stddev", &SweepGrid::Cell::stddev);

    py::class_<SweepGrid>(m, "SweepGrid")
        .def_readonly("disparity_thresholds", &SweepGrid::disparity_thresholds)
        .def_readonly("activity_thresholds", &SweepGrid::activity_thresholds)
        .def_readonly("cells", &SweepGrid::cells)
        .def_readonly("realizations", &SweepGrid::realizations)
        .def("at", &SweepGrid::at, py::arg("z_index"), py::arg("a_index"),
             py::return_value_policy::reference_internal);

    m.def(
        "threshold_sweep",
        [](NodeId n, double p, NodeId aux_count, std::uint64_t seed,
           const std::vector<double>& disparity_grid, const std::vector<double>& activity_grid,
           int realizations, int max_steps, double epsilon, int workers) {
            GraphSpec spec;
            spec.family = aux_count > 0 ? GraphFamily::ErdosRenyiWithAuxiliary
                                        : GraphFamily::ErdosRenyi;
            spec.n = n;
            spec.target_avg_degree = p * static_cast<double>(n - 1);
            spec.aux_count = aux_count;
            spec.seed = seed;
            SimConfig cfg{.drf = DisparityResponse::negative_step(1.0),
                          .max_steps = max_steps,
                          .convergence_epsilon = epsilon,
                          .activity_threshold = 0.0,
                          .record_node_level = false};
            return threshold_sweep(spec, disparity_grid, activity_grid, realizations, cfg,
                                   workers);
        },
        py::arg("n"), py::arg("p"), py::arg("aux_count"), py::arg("seed"),
        py::arg("disparity_thresholds"), py::arg("activity_thresholds"),
        py::arg("realizations") = 50, py::arg("max_steps") = 52, py::arg("epsilon") = 1e-9,
        py::arg("workers") = 1);
}
