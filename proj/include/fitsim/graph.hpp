#ifndef FITSIM_GRAPH_HPP
#define FITSIM_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fitsim {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Immutable undirected simple graph stored in CSR form with sorted
/// adjacency lists. Safe to share across threads once constructed.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Edges are symmetrized and
    /// deduplicated; self-loops and out-of-range endpoints are rejected.
    static Graph from_edge_list(std::span<const Edge> edges, NodeId n);

    NodeId node_count() const { return n_; }
    std::size_t edge_count() const { return adjacency_.size() / 2; }

    NodeId degree(NodeId u) const {
        return static_cast<NodeId>(offsets_[u + 1] - offsets_[u]);
    }

    /// Neighbors of u in ascending order.
    std::span<const NodeId> neighbors(NodeId u) const {
        return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
    }

    double average_degree() const;

    /// Canonical edge list: pairs with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    NodeId n_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> adjacency_;
};

enum class GraphFamily {
    ErdosRenyi,
    BarabasiAlbert,
    ErdosRenyiWithAuxiliary,
    Florentine,
    EdgeListFile,
};

std::string_view to_string(GraphFamily family);
std::optional<GraphFamily> parse_graph_family(std::string_view name);

/// Declarative description of a network. Together with the seed it fully
/// determines the generated graph, byte for byte.
struct GraphSpec {
    GraphFamily family = GraphFamily::ErdosRenyi;
    NodeId n = 0;
    double target_avg_degree = 0.0;
    std::uint64_t seed = 0;
    NodeId aux_count = 0;      // ErdosRenyiWithAuxiliary only
    std::string path;          // EdgeListFile only

    /// Edge probability implied by the target average degree: d / (n - 1).
    double edge_probability() const;
};

Graph generate(const GraphSpec& spec);

/// G(n, p): every unordered pair is an edge independently with probability p.
Graph generate_erdos_renyi(NodeId n, double p, std::uint64_t seed);

/// Preferential attachment starting from a star on m + 1 nodes whose center
/// is node m; each arriving node attaches to m distinct existing nodes with
/// probability proportional to current degree.
Graph generate_barabasi_albert(NodeId n, NodeId m, std::uint64_t seed);

/// G(n, p) plus aux_count extra nodes; every original node gains exactly one
/// edge to a uniformly chosen auxiliary node.
Graph generate_er_with_auxiliary(NodeId n, double p, NodeId aux_count, std::uint64_t seed);

/// The embedded 15-family marriage-tie network of Renaissance Florence.
/// Node indices follow the alphabetical order of florentine_family_names().
Graph florentine_families();
std::span<const std::string_view> florentine_family_names();

/// Plain-text edge list: one "u v" pair per line, 0-indexed, undirected,
/// '#' starts a comment. Node count is max endpoint + 1 unless given.
Graph read_edge_list(std::istream& in, std::optional<NodeId> n = std::nullopt);
Graph load_edge_list_file(const std::string& path, std::optional<NodeId> n = std::nullopt);
void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::string_view> node_names = {});

} // namespace fitsim

#endif // FITSIM_GRAPH_HPP
