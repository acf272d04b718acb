#include "tpp/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace tpp {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    adj_.resize(n_);
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto [u, v] : edges) {
        if (u < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    edges_ = std::move(edges);
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj_[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0;
    long m = 0;
    long seen_edges = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> sorted_check;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw ParseError(line_no, "duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError(line_no, "malformed header, expected 'p <n> <m>'");
            std::string extra;
            if (ls >> extra) throw ParseError(line_no, "trailing tokens after header");
            have_header = true;
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }
        if (tag == "e") {
            if (!have_header) throw ParseError(line_no, "edge before header");
            long u1 = 0, v1 = 0;
            if (!(ls >> u1 >> v1))
                throw ParseError(line_no, "malformed edge, expected 'e <u> <v>'");
            std::string extra;
            if (ls >> extra) throw ParseError(line_no, "trailing tokens after edge");
            if (u1 < 1 || u1 > n || v1 < 1 || v1 > n)
                throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(n));
            if (u1 == v1) throw ParseError(line_no, "self-loop");
            int u = static_cast<int>(u1 - 1), v = static_cast<int>(v1 - 1);
            if (u > v) std::swap(u, v);
            auto it = std::lower_bound(sorted_check.begin(), sorted_check.end(),
                                       std::make_pair(u, v));
            if (it != sorted_check.end() && *it == std::make_pair(u, v))
                throw ParseError(line_no, "duplicate edge");
            sorted_check.insert(it, {u, v});
            edges.push_back({u, v});
            ++seen_edges;
            continue;
        }
        throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
    if (!have_header) throw ParseError(line_no, "missing header");
    if (seen_edges != m)
        throw ParseError(line_no, "header declares " + std::to_string(m) +
                                      " edges, found " + std::to_string(seen_edges));
    return Graph(n, std::move(edges));
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
    }
    return Graph(n, edges);
}

Graph gen_random(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must be within [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    // Threshold comparison instead of a distribution: the generator's output
    // is then fixed by the mt19937_64 specification alone.
    const long double scale = 18446744073709551616.0L;  // 2^64
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t draw = rng();
            bool take;
            if (p >= 1.0)
                take = true;
            else if (p <= 0.0)
                take = false;
            else
                take = static_cast<long double>(draw) < p * scale;
            if (take) edges.push_back({u, v});
        }
    }
    return Graph(n, std::move(edges));
}

Graph named_graph(const std::string& name) {
    if (name == "k2") return graph_from_edges(2, {{0, 1}});
    if (name == "k3") return graph_from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    if (name == "p4") return graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    if (name == "c6")
        return graph_from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    if (name == "star5")
        return graph_from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    throw std::invalid_argument("unknown named graph '" + name + "'");
}

}  // namespace tpp
