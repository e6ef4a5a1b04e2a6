// Independent reference implementations used as test oracles. These
// deliberately use plain summation and straightforward control flow, not the
// library's compensated/CSR code paths.

#ifndef FITSIM_TEST_ORACLES_HPP
#define FITSIM_TEST_ORACLES_HPP

#include "fitsim/drf.hpp"
#include "fitsim/graph.hpp"
#include "fitsim/metrics.hpp"
#include "fitsim/rng.hpp"

#include <cmath>
#include <optional>
#include <queue>
#include <vector>

namespace oracles {

using fitsim::Graph;
using fitsim::NodeId;

inline bool is_connected(const Graph& g) {
    if (g.node_count() == 0) return true;
    std::vector<bool> seen(g.node_count(), false);
    std::queue<NodeId> q;
    q.push(0);
    seen[0] = true;
    std::size_t visited = 1;
    while (!q.empty()) {
        const NodeId u = q.front();
        q.pop();
        for (NodeId v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = true;
                ++visited;
                q.push(v);
            }
        }
    }
    return visited == g.node_count();
}

inline std::optional<double> avg_friend_degree(const Graph& g, NodeId u) {
    if (g.degree(u) == 0) return std::nullopt;
    double sum = 0.0;
    for (NodeId v : g.neighbors(u)) sum += g.degree(v);
    return sum / g.degree(u);
}

inline std::optional<double> local_paradox(const Graph& g, NodeId u) {
    const auto afd = oracles::avg_friend_degree(g, u);
    if (!afd) return std::nullopt;
    return *afd / g.degree(u);
}

inline std::optional<double> weighted_local_paradox(const Graph& g,
                                                    const std::vector<double>& rates, NodeId u) {
    double w = 0.0, wd = 0.0;
    bool any = false;
    for (NodeId v : g.neighbors(u)) {
        if (rates[v] > 0.0) any = true;
        w += rates[v];
        wd += rates[v] * g.degree(v);
    }
    if (!any) return std::nullopt;
    return wd / w / g.degree(u);
}

inline std::optional<double> sharing_bias(const Graph& g, const std::vector<double>& rates,
                                          NodeId u) {
    const auto wlp = oracles::weighted_local_paradox(g, rates, u);
    const auto lp = oracles::local_paradox(g, u);
    if (!wlp || !lp) return std::nullopt;
    return *wlp / *lp;
}

/// One synchronous update of the sharing rule, written independently of the
/// engine. Nodes are visited in reverse order to exercise order-independence.
inline std::vector<double> step(const Graph& g, const std::vector<double>& rates,
                                const std::vector<double>& baseline,
                                const fitsim::DisparityResponse& drf,
                                double activity_threshold = 0.0) {
    const NodeId n = g.node_count();
    std::vector<double> next(n, 0.0);
    for (NodeId i = n; i-- > 0;) {
        const NodeId u = i;
        if (rates[u] <= 0.0) {
            next[u] = 0.0;
            continue;
        }
        if (g.degree(u) == 0) {
            next[u] = baseline[u];
            continue;
        }
        std::size_t sharing = 0;
        for (NodeId v : g.neighbors(u))
            if (rates[v] > 0.0) ++sharing;

        double r;
        if (sharing == 0) {
            r = baseline[u];
        } else {
            r = drf(*oracles::weighted_local_paradox(g, rates, u)) * baseline[u];
        }
        if (activity_threshold > 0.0 &&
            static_cast<double>(sharing) / g.degree(u) < activity_threshold)
            r = 0.0;
        next[u] = r;
    }
    return next;
}

/// Full-recomputation version of the per-step aggregates.
inline fitsim::StepMetrics step_metrics(const Graph& g, const std::vector<double>& prev,
                                        const std::vector<double>& cur, int step_index) {
    const NodeId n = g.node_count();
    fitsim::StepMetrics m;
    m.step = step_index;
    double rate_sum = 0.0;
    std::size_t sharers = 0;
    for (NodeId u = 0; u < n; ++u) {
        rate_sum += cur[u];
        if (cur[u] > 0.0) ++sharers;
    }
    m.mean_rate = rate_sum / n;
    m.sharer_fraction = static_cast<double>(sharers) / n;

    double wlp_sum = 0.0, disp_sum = 0.0;
    std::size_t wlp_count = 0, disp_count = 0, movers = 0, up = 0, down = 0;
    for (NodeId u = 0; u < n; ++u) {
        const auto wlp_cur = oracles::weighted_local_paradox(g, cur, u);
        const auto wlp_prev = oracles::weighted_local_paradox(g, prev, u);
        if (wlp_cur) {
            wlp_sum += *wlp_cur;
            ++wlp_count;
            if (cur[u] > 0.0) {
                disp_sum += *wlp_cur;
                ++disp_count;
            }
        }
        if (cur[u] > 0.0 && wlp_cur && wlp_prev) {
            ++movers;
            if (*wlp_cur > *wlp_prev + 1e-12) ++up;
            if (*wlp_cur < *wlp_prev - 1e-12) ++down;
        }
    }
    m.mean_wlp = wlp_count ? wlp_sum / wlp_count : std::nan("");
    m.mean_disparity = disp_count ? disp_sum / disp_count : std::nan("");
    m.frac_disparity_up = movers ? static_cast<double>(up) / movers : 0.0;
    m.frac_disparity_down = movers ? static_cast<double>(down) / movers : 0.0;
    return m;
}

/// Random test instances; rates mix zeros with positive values.
inline std::vector<double> random_rates(fitsim::Xoshiro256PlusPlus& rng, std::size_t n,
                                        double zero_fraction = 0.3) {
    std::vector<double> rates(n);
    for (auto& r : rates)
        r = rng.next_double() < zero_fraction ? 0.0 : 0.05 + 4.0 * rng.next_double();
    return rates;
}

} // namespace oracles

#endif // FITSIM_TEST_ORACLES_HPP
