#ifndef TPP_GRAPH_HPP
#define TPP_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tpp {

/// Immutable simple undirected graph on vertices 0..n-1.
/// Adjacency lists are kept sorted; the edge list is canonical (u < v,
/// lexicographically sorted, no duplicates).
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Vertex sets of the connected components, each sorted ascending,
    /// ordered by smallest member.
    std::vector<std::vector<int>> components() const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

/// Error raised by parse_graph, carrying the 1-based input line.
struct ParseError : std::runtime_error {
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
    int line;
};

/// Parses the .gr instance format: a header `p <n> <m>`, then exactly m
/// lines `e <u> <v>` with 1-indexed endpoints. `c` lines are comments.
/// Rejects self-loops, duplicate edges and out-of-range endpoints.
Graph parse_graph(std::string_view text);

/// Renders a graph back into the .gr format (1-indexed, canonical edge order).
std::string format_graph(const Graph& g);

/// Builds a graph from 0-indexed endpoint pairs. Duplicate pairs (in either
/// orientation) collapse to one edge. Throws std::invalid_argument on
/// self-loops or out-of-range endpoints.
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

/// Erdos-Renyi G(n, p), reproducible: one mt19937_64 draw per vertex pair
/// (u, v), u < v, in lexicographic order; the pair becomes an edge when the
/// draw falls below p * 2^64.
Graph gen_random(int n, double p, std::uint64_t seed);

/// Small named instances: k2, k3, p4, c6, star5.
Graph named_graph(const std::string& name);

}  // namespace tpp

#endif
