#ifndef FITSIM_IO_HPP
#define FITSIM_IO_HPP

#include "fitsim/analysis.hpp"
#include "fitsim/engine.hpp"
#include "fitsim/graph.hpp"

#include <iosfwd>
#include <string>

namespace fitsim {

/// Locale-independent decimal rendering with 12 significant digits; '.' is
/// always the separator. Integral values print without an exponent where
/// possible. This pin is what makes golden-file comparisons byte-exact.
std::string format_double(double v);

// CSV schema version 1. Header names are stable identifiers.
inline constexpr int kCsvSchemaVersion = 1;
inline constexpr const char* kTrajectoryHeader =
    "step,mean_rate,sharer_fraction,mean_wlp,mean_disparity,frac_disparity_up,"
    "frac_disparity_down";
inline constexpr const char* kNodeHeader = "node,degree,lp,terminal_step,final_rate";
inline constexpr const char* kSweepHeader =
    "disparity_threshold,activity_threshold,mean_terminal_fraction,std,realizations";
inline constexpr const char* kSuiteSummaryHeader =
    "network,family,nodes,target_avg_degree,graph_seed,drf,converged,terminal_step,"
    "terminal_mean_rate,terminal_sharer_fraction";

void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
void write_node_csv(std::ostream& out, const Graph& g, const Trajectory& traj);
void write_sweep_csv(std::ostream& out, const SweepGrid& grid);

} // namespace fitsim

#endif // FITSIM_IO_HPP
