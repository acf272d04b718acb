#ifndef TPP_SEED_HPP
#define TPP_SEED_HPP

#include "tpp/graph.hpp"
#include "tpp/oracle.hpp"
#include "tpp/partition.hpp"

namespace tpp {

enum class SeedMode { Exact, Heuristic, Auto };

struct SeedConfig {
    SeedMode mode = SeedMode::Auto;
    int exact_threshold = 20;  // Auto picks Exact iff n <= this
};

struct SeedResult {
    PathPartition partition;
    bool exact = false;  // singleton count proven minimal
};

/// Starting cover with as few 1-paths as the mode affords. Exact mode runs
/// the subset oracle minimizing (singletons, then total) and is certified;
/// heuristic mode grows paths greedily and then drives the singleton
/// reduction rules to a fixed point. Exact mode propagates OverCapError.
SeedResult initial_partition(const Graph& g, const SeedConfig& cfg,
                             int oracle_cap = kDefaultOracleCap);

/// Applies three singleton-reduction rules to a fixed point:
///   S1  two adjacent singletons become a 2-path;
///   S2  a singleton adjacent to a 2-path endpoint extends it to a 3-path;
///   S3  a singleton adjacent to an endpoint of some realizable ordering of
///       a 3-path splits singleton + 3-path into two 2-paths.
/// Every rule strictly decreases the singleton count and never increases
/// the path count.
PathPartition reduce_singletons(const Graph& g, const PathPartition& q);

}  // namespace tpp

#endif
