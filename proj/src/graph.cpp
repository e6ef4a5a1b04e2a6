#include "fitsim/graph.hpp"

#include "fitsim/rng.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fitsim {

Graph Graph::from_edge_list(std::span<const Edge> edges, NodeId n) {
    for (const auto& [a, b] : edges) {
        if (a == b)
            throw std::invalid_argument("self-loop rejected: (" + std::to_string(a) + ", " +
                                        std::to_string(b) + ")");
        if (a >= n || b >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(a) +
                                        ", " + std::to_string(b) + ") with n = " +
                                        std::to_string(n));
    }

    // Symmetrize, then sort/unique; sorted CSR falls out of the edge order.
    std::vector<Edge> directed;
    directed.reserve(edges.size() * 2);
    for (const auto& [a, b] : edges) {
        directed.emplace_back(a, b);
        directed.emplace_back(b, a);
    }
    std::sort(directed.begin(), directed.end());
    directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

    Graph g;
    g.n_ = n;
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : directed) g.offsets_[u + 1]++;
    for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];
    g.adjacency_.reserve(directed.size());
    for (const auto& [u, v] : directed) g.adjacency_.push_back(v);

    // Construction-time invariant check: symmetry, no self-loops, sorted
    // duplicate-free adjacency, degree/adjacency consistency.
    for (NodeId u = 0; u < n; ++u) {
        auto nb = g.neighbors(u);
        if (g.degree(u) != nb.size())
            throw std::logic_error("graph invariant violated: degree mismatch");
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const NodeId v = nb[i];
            if (v == u) throw std::logic_error("graph invariant violated: self-loop");
            if (i > 0 && nb[i - 1] >= v)
                throw std::logic_error("graph invariant violated: unsorted adjacency");
            auto back = g.neighbors(v);
            if (!std::binary_search(back.begin(), back.end(), u))
                throw std::logic_error("graph invariant violated: asymmetric edge");
        }
    }
    return g;
}

double Graph::average_degree() const {
    if (n_ == 0) return 0.0;
    return 2.0 * static_cast<double>(edge_count()) / static_cast<double>(n_);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < n_; ++u)
        for (NodeId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string_view to_string(GraphFamily family) {
    switch (family) {
    case GraphFamily::ErdosRenyi: return "er";
    case GraphFamily::BarabasiAlbert: return "ba";
    case GraphFamily::ErdosRenyiWithAuxiliary: return "er-aux";
    case GraphFamily::Florentine: return "ffn";
    case GraphFamily::EdgeListFile: return "file";
    }
    return "unknown";
}

std::optional<GraphFamily> parse_graph_family(std::string_view name) {
    if (name == "er") return GraphFamily::ErdosRenyi;
    if (name == "ba") return GraphFamily::BarabasiAlbert;
    if (name == "er-aux") return GraphFamily::ErdosRenyiWithAuxiliary;
    if (name == "ffn") return GraphFamily::Florentine;
    if (name == "file") return GraphFamily::EdgeListFile;
    return std::nullopt;
}

double GraphSpec::edge_probability() const {
    if (n < 2) return 0.0;
    return target_avg_degree / static_cast<double>(n - 1);
}

Graph generate(const GraphSpec& spec) {
    switch (spec.family) {
    case GraphFamily::ErdosRenyi:
        return generate_erdos_renyi(spec.n, spec.edge_probability(), spec.seed);
    case GraphFamily::BarabasiAlbert: {
        const auto m = static_cast<NodeId>(std::max(1.0, std::round(spec.target_avg_degree / 2.0)));
        return generate_barabasi_albert(spec.n, m, spec.seed);
    }
    case GraphFamily::ErdosRenyiWithAuxiliary:
        return generate_er_with_auxiliary(spec.n, spec.edge_probability(), spec.aux_count,
                                          spec.seed);
    case GraphFamily::Florentine:
        return florentine_families();
    case GraphFamily::EdgeListFile:
        return load_edge_list_file(spec.path);
    }
    throw std::invalid_argument("unknown graph family");
}

Graph generate_erdos_renyi(NodeId n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must be in [0, 1]");
    Xoshiro256PlusPlus rng(seed);
    std::vector<Edge> edges;
    if (p > 0.0) edges.reserve(static_cast<std::size_t>(p * n * (n - 1) / 2.0 * 1.1) + 16);
    // Fixed pair order (u < v, lexicographic) pins the RNG consumption
    // sequence, which is what makes the generator reproducible.
    for (NodeId u = 0; u + 1 < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    return Graph::from_edge_list(edges, n);
}

Graph generate_barabasi_albert(NodeId n, NodeId m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("attachment count m must be >= 1");
    if (m >= n)
        throw std::invalid_argument("attachment count m = " + std::to_string(m) +
                                    " must be < node count n = " + std::to_string(n));
    Xoshiro256PlusPlus rng(seed);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m) * n);

    // Seed graph: star on nodes 0..m with center m, so no node starts with
    // degree zero and the first arrival sees m + 1 attachment candidates.
    // One endpoint slot per degree unit; sampling uniformly from this list
    // is sampling proportional to degree.
    std::vector<NodeId> degree_slots;
    degree_slots.reserve(2 * edges.capacity());
    for (NodeId leaf = 0; leaf < m; ++leaf) {
        edges.emplace_back(leaf, m);
        degree_slots.push_back(leaf);
        degree_slots.push_back(m);
    }

    std::vector<NodeId> targets;
    targets.reserve(m);
    for (NodeId w = m + 1; w < n; ++w) {
        targets.clear();
        while (targets.size() < m) {
            const NodeId candidate = degree_slots[rng.next_below(degree_slots.size())];
            if (std::find(targets.begin(), targets.end(), candidate) == targets.end())
                targets.push_back(candidate);
        }
        for (NodeId t : targets) {
            edges.emplace_back(t, w);
            degree_slots.push_back(t);
            degree_slots.push_back(w);
        }
    }
    return Graph::from_edge_list(edges, n);
}

Graph generate_er_with_auxiliary(NodeId n, double p, NodeId aux_count, std::uint64_t seed) {
    if (aux_count < 1) throw std::invalid_argument("aux_count must be >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must be in [0, 1]");
    Xoshiro256PlusPlus rng(seed);
    std::vector<Edge> edges;
    // Base G(n, p) pairs are drawn first, then the auxiliary attachments;
    // the order is part of the reproducibility contract.
    for (NodeId u = 0; u + 1 < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    for (NodeId u = 0; u < n; ++u) {
        const NodeId aux = n + static_cast<NodeId>(rng.next_below(aux_count));
        edges.emplace_back(u, aux);
    }
    return Graph::from_edge_list(edges, n + aux_count);
}

Graph read_edge_list(std::istream& in, std::optional<NodeId> n) {
    std::vector<Edge> edges;
    NodeId max_node = 0;
    bool any = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long long a = 0, b = 0;
        if (!(ls >> a)) continue; // blank or comment-only line
        if (!(ls >> b))
            throw std::invalid_argument("malformed edge list line " + std::to_string(line_no) +
                                        ": expected \"u v\"");
        if (a < 0 || b < 0)
            throw std::invalid_argument("negative node id on line " + std::to_string(line_no));
        edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
        max_node = std::max({max_node, static_cast<NodeId>(a), static_cast<NodeId>(b)});
        any = true;
    }
    const NodeId node_count = n.value_or(any ? max_node + 1 : 0);
    return Graph::from_edge_list(edges, node_count);
}

Graph load_edge_list_file(const std::string& path, std::optional<NodeId> n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list file: " + path);
    return read_edge_list(in, n);
}

void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::string_view> node_names) {
    out << "# undirected simple graph, 0-indexed, one \"u v\" per line\n";
    out << "# nodes " << g.node_count() << " edges " << g.edge_count() << "\n";
    for (std::size_t i = 0; i < node_names.size(); ++i)
        out << "# node " << i << " " << node_names[i] << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

} // namespace fitsim
