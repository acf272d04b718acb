#ifndef TPP_LOCALSEARCH_HPP
#define TPP_LOCALSEARCH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpp/partition.hpp"
#include "tpp/seed.hpp"

namespace tpp {

/// Local operations in priority order. An operation named a-b-by-c-d trades
/// a 2-paths and b 3-paths of the cover for c 2-paths and d 3-paths on the
/// same vertices, always one path fewer.
enum class OpKind {
    Op30_02,      // three 2-paths chain into a 6-path, split into two 3-paths
    Op31_03_P21,  // three 2-paths + a 3-path; 3-path vertices feed all three
    Op31_03_P22,  // two adjacent 2-paths leave a singleton absorbed by the 3-path
    Op41_13,      // four 2-paths (two adjacent pairs) + one 3-path
    Op42_14_C1,   // four 2-paths + two 3-paths, both hooks at endpoints
    Op42_14_C2,   // hooks at an endpoint and a midpoint
    Op42_14_C3,   // hooks at both midpoints
};
inline constexpr int kNumOpKinds = 7;
const char* op_name(OpKind k);

struct LocalMove {
    OpKind kind;
    std::vector<int> removed_ids;                 // ids in the partition matched against
    std::vector<Path> removed;                    // the paths those ids held
    std::vector<Path> added;                      // replacement collection
    std::vector<std::pair<int, int>> witness;     // replacement edges not on removed paths
};

/// All orderings of p's three vertices that are paths in g, canonical and
/// sorted; contains p itself. Singleton {p} when the closing edge is absent.
std::vector<Path> path_variants(const Graph& g, const Path& p);

/// Matchers for the five priority levels. Each returns the first match under
/// a fixed scan order (paths by ascending id, variants canonically, neighbor
/// candidates ascending) or nullopt. `scanned`, when given, accumulates the
/// number of candidate configurations examined. Matchers assume every
/// higher-priority operation has already failed on q and do not re-check.
std::optional<LocalMove> find_op_3_0(const Graph& g, const PathPartition& q,
                                     std::uint64_t* scanned = nullptr);

enum class Class31 { C21, C22 };
std::optional<LocalMove> find_op_3_1(const Graph& g, const PathPartition& q,
                                     Class31 cls, std::uint64_t* scanned = nullptr);

std::optional<LocalMove> find_op_4_1(const Graph& g, const PathPartition& q,
                                     std::uint64_t* scanned = nullptr);

std::optional<LocalMove> find_op_4_2(const Graph& g, const PathPartition& q,
                                     std::uint64_t* scanned = nullptr);

/// Exhaustive backtracking split of `vertices` into j1 edges and j2 3-paths
/// realizable in g; first solution in canonical order, nullopt when none.
std::optional<std::vector<Path>> construct_replacement(const Graph& g,
                                                       std::vector<int> vertices,
                                                       int j1, int j2);

/// The full priority cascade; first move found, if any.
std::optional<LocalMove> find_first_move(const Graph& g, const PathPartition& q,
                                         std::uint64_t* scanned = nullptr);

/// Applies mv to q after checking it still matches (ids hold the recorded
/// paths) and that the move is well-formed: one path fewer, same vertex
/// multiset, no 1-paths on either side, replacement edges present in g.
void apply_move(const Graph& g, PathPartition& q, const LocalMove& mv);

struct SolveOptions {
    SeedConfig seed;
    int oracle_cap = kDefaultOracleCap;
    bool record_trace = false;
    // Adversarial entry point: start from this cover instead of seeding.
    std::optional<PathPartition> initial;
};

struct SolveReport {
    PartitionStats initial_stats;
    PartitionStats final_stats;
    int iterations = 0;
    std::array<std::uint64_t, kNumOpKinds> op_counts{};
    std::vector<LocalMove> trace;  // filled when record_trace
    double wall_ms = 0.0;
    bool seed_exact = false;       // singleton count certified minimal
    bool seed_checked = false;     // certification was actually performed
    std::uint64_t total_scans = 0;
    std::vector<std::uint64_t> scans_per_iteration;  // includes the final failed scan
};

struct SolveOutcome {
    PathPartition partition;
    SolveReport report;
};

struct SeedError : std::runtime_error {
    explicit SeedError(const std::string& what) : std::runtime_error(what) {}
};

/// Seeds (or adopts opts.initial after validating it), then applies the
/// highest-priority available operation until none applies.
SolveOutcome solve(const Graph& g, const SolveOptions& opts = {});

}  // namespace tpp

#endif
