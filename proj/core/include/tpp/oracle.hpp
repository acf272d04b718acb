#ifndef TPP_ORACLE_HPP
#define TPP_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tpp/partition.hpp"

namespace tpp {

inline constexpr int kDefaultOracleCap = 24;

struct OverCapError : std::runtime_error {
    explicit OverCapError(const std::string& what) : std::runtime_error(what) {}
};

struct OracleResult {
    PathPartition best;
    PartitionStats best_stats;
    std::uint64_t explored = 0;  // subsets evaluated across all components
};

/// All canonical 1-, 2- and 3-paths of g that use only vertices of `subset`
/// and contain its minimum vertex, sorted canonically.
std::vector<Path> enumerate_small_paths(const Graph& g, const std::vector<int>& subset);

/// Exact minimum-size cover by paths of order <= 3, via memoized subset
/// recursion per connected component (a cover must use a path through the
/// lowest remaining vertex). Deterministic: among equally good paths the
/// canonically smallest is chosen at every subset. Throws OverCapError when
/// a component exceeds `cap` vertices.
OracleResult optimal_partition(const Graph& g, int cap = kDefaultOracleCap);

/// Same machinery minimizing (singleton count, then total size).
OracleResult min_singletons_exact(const Graph& g, int cap = kDefaultOracleCap);

}  // namespace tpp

#endif
