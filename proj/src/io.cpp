#include "fitsim/io.hpp"

#include "fitsim/paradox.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>

namespace fitsim {

std::string format_double(double v) {
    char buf[40];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, ptr);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    out << kTrajectoryHeader << "\n";
    for (const auto& m : traj.metrics) {
        out << m.step << ',' << format_double(m.mean_rate) << ','
            << format_double(m.sharer_fraction) << ',' << format_double(m.mean_wlp) << ','
            << format_double(m.mean_disparity) << ',' << format_double(m.frac_disparity_up)
            << ',' << format_double(m.frac_disparity_down) << "\n";
    }
}

void write_node_csv(std::ostream& out, const Graph& g, const Trajectory& traj) {
    const auto profile = local_paradox(g);
    out << kNodeHeader << "\n";
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const double lp = profile.defined[u] ? profile.local_paradox[u]
                                             : std::numeric_limits<double>::quiet_NaN();
        out << u << ',' << g.degree(u) << ',' << format_double(lp) << ','
            << traj.terminal_sharing_step[u] << ',' << format_double(traj.final_rates[u])
            << "\n";
    }
}

void write_sweep_csv(std::ostream& out, const SweepGrid& grid) {
    out << kSweepHeader << "\n";
    for (std::size_t zi = 0; zi < grid.disparity_thresholds.size(); ++zi) {
        for (std::size_t ai = 0; ai < grid.activity_thresholds.size(); ++ai) {
            const auto& cell = grid.at(zi, ai);
            out << format_double(grid.disparity_thresholds[zi]) << ','
                << format_double(grid.activity_thresholds[ai]) << ','
                << format_double(cell.mean_terminal_fraction) << ','
                << format_double(cell.stddev) << ',' << grid.realizations << "\n";
        }
    }
}

} // namespace fitsim
