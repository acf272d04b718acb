#ifndef TPP_TIGHT_HPP
#define TPP_TIGHT_HPP

#include "tpp/graph.hpp"
#include "tpp/partition.hpp"

namespace tpp {

struct TightInstance {
    Graph graph;
    PathPartition seed;  // nine 2-paths + three 3-paths, no singletons
};

/// Deterministic 27-vertex worst-case instance. The optimum is nine 3-paths
/// while the returned seed cover of twelve paths admits no local operation,
/// so the solver returns it unchanged: ratio exactly 12/9 = 4/3.
///
/// Built by a bounded search over a fixed gadget family (see tight.cpp);
/// every returned instance is verified at construction: the seed is a valid
/// cover with zero 1-paths (hence minimal in 1-paths), no operation of any
/// priority applies to it, and the exact optimum is 9. Throws
/// std::logic_error if the search or verification ever fails.
TightInstance gen_tight_candidate();

}  // namespace tpp

#endif
