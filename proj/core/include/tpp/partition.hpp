#ifndef TPP_PARTITION_HPP
#define TPP_PARTITION_HPP

#include <string>
#include <vector>

#include "tpp/graph.hpp"

namespace tpp {

/// A path of order 1, 2 or 3, stored in canonical orientation: a 2-path has
/// its endpoints ascending, a 3-path has its smaller endpoint first. Two
/// paths that are reversals of each other therefore compare equal.
struct Path {
    std::vector<int> v;

    Path() = default;
    explicit Path(std::vector<int> verts);
    Path(std::initializer_list<int> verts) : Path(std::vector<int>(verts)) {}

    int order() const { return static_cast<int>(v.size()); }
    bool operator==(const Path& o) const { return v == o.v; }
    bool operator<(const Path& o) const { return v < o.v; }
    std::string str() const;
};

/// Collection of vertex-disjoint paths intended to cover all vertices.
/// Paths are kept canonically sorted; ids are positions in that order and
/// are reassigned after every mutation.
class PathPartition {
public:
    PathPartition() = default;
    PathPartition(int n, std::vector<Path> paths);

    int num_vertices() const { return n_; }
    const std::vector<Path>& paths() const { return paths_; }
    const Path& path(int id) const { return paths_.at(id); }
    int size() const { return static_cast<int>(paths_.size()); }

    /// Id of the path covering v, or -1 when uncovered.
    int path_of(int v) const;

    /// Replaces the paths with the given ids. New paths may reuse only the
    /// vertices that were freed. Throws std::invalid_argument when an id is
    /// stale or the exchange breaks disjointness.
    void replace(const std::vector<int>& removed_ids, const std::vector<Path>& added);

private:
    void reindex();

    int n_ = 0;
    std::vector<Path> paths_;
    std::vector<int> vertex_path_;  // vertex -> path id, -1 if uncovered
};

struct PartitionStats {
    int c1 = 0, c2 = 0, c3 = 0;
    int total() const { return c1 + c2 + c3; }
    bool operator==(const PartitionStats&) const = default;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks that q is a feasible cover of g: every vertex on exactly one path,
/// every path of order 1..3 with distinct vertices and consecutive pairs
/// that are edges of g. All violations are reported, none throws.
ValidationReport validate(const Graph& g, const PathPartition& q);

PartitionStats stats(const PathPartition& q);

/// The trivial cover by n 1-paths.
PathPartition all_singletons(const Graph& g);

}  // namespace tpp

#endif
