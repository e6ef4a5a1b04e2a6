#include "fitsim/paradox.hpp"

#include "fitsim/numeric.hpp"

#include <cassert>

namespace fitsim {

namespace {

struct WeightedNeighborSums {
    double rate_sum = 0.0;          // sum of r_v over neighbors
    double rate_degree_sum = 0.0;   // sum of r_v * d_v over neighbors
    bool any_sharing = false;
};

// Neighbors are iterated in ascending order everywhere so that compensated
// sums are bit-reproducible across runs and thread counts.
WeightedNeighborSums weighted_sums(const Graph& g, std::span<const double> rates, NodeId u) {
    WeightedNeighborSums out;
    NeumaierSum w, wd;
    for (NodeId v : g.neighbors(u)) {
        const double r = rates[v];
        if (r > 0.0) out.any_sharing = true;
        w.add(r);
        wd.add(r * static_cast<double>(g.degree(v)));
    }
    out.rate_sum = w.value();
    out.rate_degree_sum = wd.value();
    return out;
}

} // namespace

std::optional<double> avg_friend_degree(const Graph& g, NodeId u) {
    const auto nb = g.neighbors(u);
    if (nb.empty()) return std::nullopt;
    NeumaierSum s;
    for (NodeId v : nb) s.add(static_cast<double>(g.degree(v)));
    return s.value() / static_cast<double>(nb.size());
}

ParadoxProfile local_paradox(const Graph& g) {
    const NodeId n = g.node_count();
    ParadoxProfile p;
    p.local_paradox.assign(n, 0.0);
    p.avg_friend_degree.assign(n, 0.0);
    p.defined.assign(n, 0);
    for (NodeId u = 0; u < n; ++u) {
        if (const auto afd = avg_friend_degree(g, u)) {
            p.avg_friend_degree[u] = *afd;
            p.local_paradox[u] = *afd / static_cast<double>(g.degree(u));
            p.defined[u] = 1;
        }
    }
    return p;
}

std::optional<double> sharing_bias(const Graph& g, std::span<const double> rates, NodeId u) {
    assert(rates.size() == g.node_count());
    const auto sums = weighted_sums(g, rates, u);
    if (!sums.any_sharing) return std::nullopt;
    const double weighted_mean = sums.rate_degree_sum / sums.rate_sum;
    const double unweighted_mean = *avg_friend_degree(g, u);
    return weighted_mean / unweighted_mean;
}

std::optional<double> weighted_local_paradox(const Graph& g, std::span<const double> rates,
                                             NodeId u) {
    assert(rates.size() == g.node_count());
    const auto sums = weighted_sums(g, rates, u);
    if (!sums.any_sharing) return std::nullopt;
    return sums.rate_degree_sum / sums.rate_sum / static_cast<double>(g.degree(u));
}

std::optional<double> neighbor_feedback(const Graph& g, std::span<const double> rates,
                                        const EngagementModel& e, NodeId u) {
    assert(rates.size() == g.node_count());
    // Rate-weighted mean of K * d_v, summed term by term so that scaling K
    // by a power of two rescales the result exactly.
    NeumaierSum w, wf;
    bool any_sharing = false;
    for (NodeId v : g.neighbors(u)) {
        const double r = rates[v];
        if (r > 0.0) any_sharing = true;
        w.add(r);
        wf.add(r * (e.feedback_per_friend * static_cast<double>(g.degree(v))));
    }
    if (!any_sharing) return std::nullopt;
    return wf.value() / w.value();
}

std::optional<double> feedback_disparity(const Graph& g, std::span<const double> rates,
                                         const EngagementModel& e, NodeId u) {
    assert(rates.size() == g.node_count());
    if (rates[u] <= 0.0) return std::nullopt;
    if (g.degree(u) == 0) return std::nullopt;
    const auto fnbr = neighbor_feedback(g, rates, e, u);
    if (!fnbr) return std::nullopt;
    return *fnbr / (e.feedback_per_friend * static_cast<double>(g.degree(u)));
}

} // namespace fitsim
