#include "tpp/partition.hpp"

#include <algorithm>
#include <sstream>

namespace tpp {

Path::Path(std::vector<int> verts) : v(std::move(verts)) {
    if (v.empty() || v.size() > 3)
        throw std::invalid_argument("path order must be 1, 2 or 3");
    if (v.size() == 2 && v[0] > v[1]) std::swap(v[0], v[1]);
    if (v.size() == 3 && v[2] < v[0]) std::swap(v[0], v[2]);
}

std::string Path::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << '-';
        out << v[i];
    }
    return out.str();
}

PathPartition::PathPartition(int n, std::vector<Path> paths)
    : n_(n), paths_(std::move(paths)) {
    std::sort(paths_.begin(), paths_.end());
    reindex();
}

void PathPartition::reindex() {
    vertex_path_.assign(n_, -1);
    for (int id = 0; id < static_cast<int>(paths_.size()); ++id) {
        for (int v : paths_[id].v) {
            if (v < 0 || v >= n_) throw std::invalid_argument("path vertex out of range");
            if (vertex_path_[v] != -1)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " on more than one path");
            vertex_path_[v] = id;
        }
    }
}

int PathPartition::path_of(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    return vertex_path_[v];
}

void PathPartition::replace(const std::vector<int>& removed_ids,
                            const std::vector<Path>& added) {
    std::vector<int> ids = removed_ids;
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw std::invalid_argument("duplicate path id in removal set");
    for (int id : ids)
        if (id < 0 || id >= size()) throw std::invalid_argument("stale path id");
    for (auto it = ids.rbegin(); it != ids.rend(); ++it)
        paths_.erase(paths_.begin() + *it);
    paths_.insert(paths_.end(), added.begin(), added.end());
    std::sort(paths_.begin(), paths_.end());
    reindex();  // throws if the exchange broke disjointness
}

ValidationReport validate(const Graph& g, const PathPartition& q) {
    ValidationReport report;
    auto complain = [&](const std::string& msg) { report.violations.push_back(msg); };

    if (q.num_vertices() != g.num_vertices())
        complain("partition declares " + std::to_string(q.num_vertices()) +
                 " vertices, graph has " + std::to_string(g.num_vertices()));

    std::vector<int> cover(g.num_vertices(), 0);
    for (int id = 0; id < q.size(); ++id) {
        const Path& p = q.path(id);
        if (p.order() < 1 || p.order() > 3) {
            complain("path " + p.str() + " has order " + std::to_string(p.order()));
            continue;
        }
        bool in_range = true;
        for (int v : p.v) {
            if (v < 0 || v >= g.num_vertices()) {
                complain("path " + p.str() + " uses out-of-range vertex " +
                         std::to_string(v));
                in_range = false;
            }
        }
        if (!in_range) continue;
        for (int v : p.v) ++cover[v];
        for (std::size_t i = 0; i + 1 < p.v.size(); ++i) {
            if (p.v[i] == p.v[i + 1])
                complain("path " + p.str() + " repeats vertex " + std::to_string(p.v[i]));
            else if (!g.has_edge(p.v[i], p.v[i + 1]))
                complain("path " + p.str() + " uses non-edge (" +
                         std::to_string(p.v[i]) + "," + std::to_string(p.v[i + 1]) + ")");
        }
        if (p.order() == 3 && p.v[0] == p.v[2])
            complain("path " + p.str() + " repeats vertex " + std::to_string(p.v[0]));
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (cover[v] == 0)
            complain("vertex " + std::to_string(v) + " uncovered");
        else if (cover[v] > 1)
            complain("vertex " + std::to_string(v) + " covered " +
                     std::to_string(cover[v]) + " times");
    }
    return report;
}

PartitionStats stats(const PathPartition& q) {
    PartitionStats s;
    for (const Path& p : q.paths()) {
        if (p.order() == 1) ++s.c1;
        else if (p.order() == 2) ++s.c2;
        else ++s.c3;
    }
    return s;
}

PathPartition all_singletons(const Graph& g) {
    std::vector<Path> paths;
    paths.reserve(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) paths.push_back(Path{v});
    return PathPartition(g.num_vertices(), std::move(paths));
}

}  // namespace tpp
