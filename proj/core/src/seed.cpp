#include "tpp/seed.hpp"

#include <algorithm>

#include "tpp/localsearch.hpp"

namespace tpp {

namespace {

// Deterministic greedy growth: take the lowest uncovered vertex, extend to
// the lowest uncovered neighbor, then try to reach order 3 from the tail
// and failing that from the head.
PathPartition greedy_paths(const Graph& g) {
    int n = g.num_vertices();
    std::vector<char> used(n, 0);
    std::vector<Path> paths;
    auto lowest_free_neighbor = [&](int v, int skip) {
        for (int w : g.neighbors(v))
            if (!used[w] && w != skip) return w;
        return -1;
    };
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        int a = lowest_free_neighbor(v, -1);
        if (a < 0) {
            paths.push_back(Path{v});
            continue;
        }
        used[a] = 1;
        int b = lowest_free_neighbor(a, v);
        if (b >= 0) {
            used[b] = 1;
            paths.push_back(Path{v, a, b});
            continue;
        }
        int c = lowest_free_neighbor(v, a);
        if (c >= 0) {
            used[c] = 1;
            paths.push_back(Path{c, v, a});
            continue;
        }
        paths.push_back(Path{v, a});
    }
    return PathPartition(n, std::move(paths));
}

// One reduction step; rules tried S1, S2, S3, each scanning in canonical
// order. Returns false at a fixed point.
bool reduce_step(const Graph& g, PathPartition& q) {
    std::vector<int> singles, twos, threes;
    for (int id = 0; id < q.size(); ++id) {
        int k = q.path(id).order();
        (k == 1 ? singles : k == 2 ? twos : threes).push_back(id);
    }

    // S1: merge two adjacent singletons.
    for (int sid : singles) {
        int s = q.path(sid).v[0];
        for (int w : g.neighbors(s)) {
            int wid = q.path_of(w);
            if (wid != sid && q.path(wid).order() == 1) {
                q.replace({sid, wid}, {Path{s, w}});
                return true;
            }
        }
    }
    // S2: attach a singleton to a 2-path endpoint.
    for (int sid : singles) {
        int s = q.path(sid).v[0];
        for (int w : g.neighbors(s)) {
            int wid = q.path_of(w);
            if (q.path(wid).order() == 2) {
                const Path& p = q.path(wid);
                int other = p.v[0] == w ? p.v[1] : p.v[0];
                q.replace({sid, wid}, {Path{s, w, other}});
                return true;
            }
        }
    }
    // S3: split singleton + 3-path into two 2-paths, rotations allowed.
    for (int sid : singles) {
        int s = q.path(sid).v[0];
        for (int tid : threes) {
            for (const Path& t : path_variants(g, q.path(tid))) {
                for (int end : {t.v[0], t.v[2]}) {
                    if (!g.has_edge(s, end)) continue;
                    int far0 = end == t.v[0] ? t.v[1] : t.v[0];
                    int far1 = end == t.v[0] ? t.v[2] : t.v[1];
                    q.replace({sid, tid}, {Path{s, end}, Path{far0, far1}});
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

PathPartition reduce_singletons(const Graph& g, const PathPartition& q) {
    PathPartition r = q;
    while (reduce_step(g, r)) {
    }
    return r;
}

SeedResult initial_partition(const Graph& g, const SeedConfig& cfg, int oracle_cap) {
    bool exact = cfg.mode == SeedMode::Exact ||
                 (cfg.mode == SeedMode::Auto &&
                  g.num_vertices() <= cfg.exact_threshold);
    if (exact) {
        OracleResult r = min_singletons_exact(g, oracle_cap);
        return SeedResult{std::move(r.best), true};
    }
    return SeedResult{reduce_singletons(g, greedy_paths(g)), false};
}

}  // namespace tpp
