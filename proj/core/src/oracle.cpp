#include "tpp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace tpp {

namespace {

// Local view of one connected component with vertices renumbered 0..k-1
// in ascending global order, so local canonical order matches global.
struct CompGraph {
    std::vector<int> to_global;
    std::vector<std::vector<int>> adj;  // sorted local adjacency
    int size() const { return static_cast<int>(to_global.size()); }
};

CompGraph compress(const Graph& g, const std::vector<int>& comp) {
    CompGraph cg;
    cg.to_global = comp;  // already sorted
    std::unordered_map<int, int> to_local;
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) to_local[comp[i]] = i;
    cg.adj.resize(comp.size());
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
        for (int w : g.neighbors(comp[i])) cg.adj[i].push_back(to_local.at(w));
        std::sort(cg.adj[i].begin(), cg.adj[i].end());
    }
    return cg;
}

std::uint32_t pack_path(const std::vector<int>& v) {
    std::uint32_t p = static_cast<std::uint32_t>(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        p |= static_cast<std::uint32_t>(v[i]) << (2 + 6 * i);
    return p;
}

std::vector<int> unpack_path(std::uint32_t p) {
    std::size_t len = p & 3u;
    std::vector<int> v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = (p >> (2 + 6 * i)) & 63u;
    return v;
}

// Canonical small paths within `mask` containing its lowest vertex,
// emitted in canonical (lexicographic vertex sequence) order.
void local_paths(const CompGraph& cg, std::uint64_t mask, std::vector<std::uint32_t>& out) {
    out.clear();
    int v0 = std::countr_zero(mask);
    auto in = [&](int x) { return (mask >> x) & 1u; };

    std::vector<std::vector<int>> seqs;
    seqs.push_back({v0});
    for (int a : cg.adj[v0]) {
        if (!in(a)) continue;
        seqs.push_back({v0, a});
        // v0 as an endpoint of a 3-path
        for (int b : cg.adj[a])
            if (b != v0 && in(b)) seqs.push_back({v0, a, b});
    }
    // v0 as the midpoint
    for (int a : cg.adj[v0]) {
        if (!in(a)) continue;
        for (int b : cg.adj[v0])
            if (b > a && in(b)) seqs.push_back({a, v0, b});
    }
    for (auto& s : seqs) {
        if (s.size() == 3 && s[2] < s[0]) std::swap(s[0], s[2]);
    }
    std::sort(seqs.begin(), seqs.end());
    seqs.erase(std::unique(seqs.begin(), seqs.end()), seqs.end());
    for (const auto& s : seqs) out.push_back(pack_path(s));
}

struct Entry {
    int c1;
    int total;
    std::uint32_t choice;
};

// cost ordering: Optimal compares total only, MinSingletons compares
// (c1, total) lexicographically; strict improvement keeps the first
// (canonically smallest) choice.
enum class Objective { Optimal, MinSingletons };

class SubsetSolver {
public:
    SubsetSolver(const CompGraph& cg, Objective obj) : cg_(cg), obj_(obj) {}

    const Entry& solve(std::uint64_t mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        ++explored_;
        Entry best{0, 0, 0};
        if (mask == 0) {
            return memo_.emplace(mask, best).first->second;
        }
        bool have = false;
        std::vector<std::uint32_t> paths;
        local_paths(cg_, mask, paths);
        for (std::uint32_t packed : paths) {
            auto seq = unpack_path(packed);
            std::uint64_t rest = mask;
            for (int v : seq) rest &= ~(1ull << v);
            const Entry& sub = solve(rest);
            Entry cand{sub.c1 + (seq.size() == 1 ? 1 : 0), sub.total + 1, packed};
            if (!have || better(cand, best)) {
                best = cand;
                have = true;
            }
        }
        return memo_.emplace(mask, best).first->second;
    }

    std::vector<std::uint32_t> reconstruct(std::uint64_t mask) {
        std::vector<std::uint32_t> picks;
        while (mask != 0) {
            const Entry& e = memo_.at(mask);
            picks.push_back(e.choice);
            for (int v : unpack_path(e.choice)) mask &= ~(1ull << v);
        }
        return picks;
    }

    std::uint64_t explored() const { return explored_; }

private:
    bool better(const Entry& a, const Entry& b) const {
        if (obj_ == Objective::Optimal) return a.total < b.total;
        if (a.c1 != b.c1) return a.c1 < b.c1;
        return a.total < b.total;
    }

    const CompGraph& cg_;
    Objective obj_;
    std::unordered_map<std::uint64_t, Entry> memo_;
    std::uint64_t explored_ = 0;
};

OracleResult run(const Graph& g, Objective obj, int cap) {
    if (cap < 1 || cap > 48) throw std::invalid_argument("oracle cap out of range");
    OracleResult result;
    std::vector<Path> all_paths;
    for (const auto& comp : g.components()) {
        if (static_cast<int>(comp.size()) > cap)
            throw OverCapError("component with " + std::to_string(comp.size()) +
                               " vertices exceeds oracle cap " + std::to_string(cap));
        CompGraph cg = compress(g, comp);
        SubsetSolver solver(cg, obj);
        std::uint64_t full = comp.size() == 64 ? ~0ull : (1ull << comp.size()) - 1;
        solver.solve(full);
        for (std::uint32_t packed : solver.reconstruct(full)) {
            std::vector<int> seq = unpack_path(packed);
            for (int& v : seq) v = cg.to_global[v];
            all_paths.push_back(Path(std::move(seq)));
        }
        result.explored += solver.explored();
    }
    result.best = PathPartition(g.num_vertices(), std::move(all_paths));
    result.best_stats = stats(result.best);
    return result;
}

}  // namespace

std::vector<Path> enumerate_small_paths(const Graph& g, const std::vector<int>& subset) {
    if (subset.empty()) throw std::invalid_argument("subset must be non-empty");
    std::vector<int> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    int v0 = sorted[0];
    auto in = [&](int x) {
        return std::binary_search(sorted.begin(), sorted.end(), x);
    };
    std::vector<Path> out;
    out.push_back(Path{v0});
    for (int a : g.neighbors(v0)) {
        if (!in(a)) continue;
        out.push_back(Path{v0, a});
        for (int b : g.neighbors(a))
            if (b != v0 && in(b)) out.push_back(Path{v0, a, b});
    }
    for (int a : g.neighbors(v0))
        for (int b : g.neighbors(v0))
            if (in(a) && in(b) && a < b) out.push_back(Path{a, v0, b});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

OracleResult optimal_partition(const Graph& g, int cap) {
    return run(g, Objective::Optimal, cap);
}

OracleResult min_singletons_exact(const Graph& g, int cap) {
    return run(g, Objective::MinSingletons, cap);
}

}  // namespace tpp
