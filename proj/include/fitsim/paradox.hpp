#ifndef FITSIM_PARADOX_HPP
#define FITSIM_PARADOX_HPP

#include "fitsim/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace fitsim {

/// Per-node sharing rates (posts per step). Length equals the node count;
/// entries are finite and >= 0.
using RateVector = std::vector<double>;

/// Local friendship paradox of every node: average friend degree divided by
/// own degree. Isolated nodes carry defined[u] == false and must never leak
/// into aggregates.
struct ParadoxProfile {
    std::vector<double> local_paradox;
    std::vector<double> avg_friend_degree;
    std::vector<char> defined;
};

/// Constant feedback-per-friend engagement. Every piece of content by a
/// degree-d node draws feedback K * d.
struct EngagementModel {
    double feedback_per_friend = 1.0;
};

/// Mean degree of u's neighbors; empty for isolated nodes.
std::optional<double> avg_friend_degree(const Graph& g, NodeId u);

ParadoxProfile local_paradox(const Graph& g);

/// Rate-weighted mean neighbor degree over the unweighted mean neighbor
/// degree. Empty when u has no sharing neighbor.
std::optional<double> sharing_bias(const Graph& g, std::span<const double> rates, NodeId u);

/// Rate-weighted mean neighbor degree divided by u's own degree. Equals
/// local_paradox * sharing_bias. Empty when u has no sharing neighbor.
std::optional<double> weighted_local_paradox(const Graph& g, std::span<const double> rates,
                                             NodeId u);

/// Rate-weighted mean feedback (K * degree) that u sees its sharing
/// neighbors receive. Empty when u has no sharing neighbor.
std::optional<double> neighbor_feedback(const Graph& g, std::span<const double> rates,
                                        const EngagementModel& e, NodeId u);

/// Ratio of the feedback u sees its sharing friends receive to the feedback
/// u receives per post. The engagement constant cancels, so this equals the
/// weighted local paradox. Empty when u is not sharing, is isolated, or has
/// no sharing neighbor.
std::optional<double> feedback_disparity(const Graph& g, std::span<const double> rates,
                                         const EngagementModel& e, NodeId u);

} // namespace fitsim

#endif // FITSIM_PARADOX_HPP
