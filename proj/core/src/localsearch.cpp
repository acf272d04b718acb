#include "tpp/localsearch.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace tpp {

namespace {

inline void bump(std::uint64_t* scanned) {
    if (scanned) ++*scanned;
}

inline int other_end(const Path& two, int v) {
    return two.v[0] == v ? two.v[1] : two.v[0];
}

bool is_two(const PathPartition& q, int id) {
    return id >= 0 && q.path(id).order() == 2;
}

// One way of collapsing two adjacent 2-paths into a 3-path plus a leftover
// singleton. Only the identities matter for matching; the replacement is
// rebuilt from scratch afterwards.
struct MergeOption {
    int id1, id2;   // the two 2-paths
    int singleton;  // vertex left over
};

struct Context {
    std::vector<int> two_ids;
    std::vector<int> three_ids;
    std::vector<MergeOption> merges;              // canonical discovery order
    std::vector<std::vector<int>> by_singleton;   // vertex -> indices into merges
};

Context build_context(const Graph& g, const PathPartition& q) {
    Context ctx;
    for (int id = 0; id < q.size(); ++id) {
        int k = q.path(id).order();
        if (k == 2) ctx.two_ids.push_back(id);
        if (k == 3) ctx.three_ids.push_back(id);
    }
    ctx.by_singleton.resize(std::max(1, q.num_vertices()));
    auto seen = [&](int a, int b, int s) {
        for (int idx : ctx.by_singleton[s]) {
            const MergeOption& m = ctx.merges[idx];
            if (m.id1 == a && m.id2 == b) return true;
        }
        return false;
    };
    for (int a_id : ctx.two_ids) {
        const Path& a = q.path(a_id);
        for (int x : a.v) {
            for (int y : g.neighbors(x)) {
                int b_id = q.path_of(y);
                if (!is_two(q, b_id) || b_id == a_id) continue;
                int sa = other_end(a, x);
                int sb = other_end(q.path(b_id), y);
                int lo = std::min(a_id, b_id), hi = std::max(a_id, b_id);
                for (int s : {sa, sb}) {
                    if (!seen(lo, hi, s)) {
                        ctx.by_singleton[s].push_back(static_cast<int>(ctx.merges.size()));
                        ctx.merges.push_back({lo, hi, s});
                    }
                }
            }
        }
    }
    return ctx;
}

bool merges_disjoint(const MergeOption& m1, const MergeOption& m2) {
    return m1.id1 != m2.id1 && m1.id1 != m2.id2 && m1.id2 != m2.id1 &&
           m1.id2 != m2.id2;
}

std::vector<std::pair<int, int>> edge_set(const std::vector<Path>& paths) {
    std::vector<std::pair<int, int>> edges;
    for (const Path& p : paths)
        for (std::size_t i = 0; i + 1 < p.v.size(); ++i)
            edges.push_back(std::minmax(p.v[i], p.v[i + 1]));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

LocalMove make_move(OpKind kind, const PathPartition& q, std::vector<int> removed_ids,
                    std::vector<Path> added) {
    LocalMove mv;
    mv.kind = kind;
    mv.removed_ids = std::move(removed_ids);
    for (int id : mv.removed_ids) mv.removed.push_back(q.path(id));
    mv.added = std::move(added);
    auto added_edges = edge_set(mv.added);
    auto removed_edges = edge_set(mv.removed);
    std::set_difference(added_edges.begin(), added_edges.end(), removed_edges.begin(),
                        removed_edges.end(), std::back_inserter(mv.witness));
    return mv;
}

std::vector<int> vertices_of(const PathPartition& q, const std::vector<int>& ids) {
    std::vector<int> vs;
    for (int id : ids)
        for (int v : q.path(id).v) vs.push_back(v);
    return vs;
}

// Builds the replacement for a certified expected collection; by the matcher
// preconditions this cannot fail, so a miss is an internal error.
std::vector<Path> replacement_or_throw(const Graph& g, const PathPartition& q,
                                       const std::vector<int>& ids, int j1, int j2) {
    auto rep = construct_replacement(g, vertices_of(q, ids), j1, j2);
    if (!rep)
        throw std::logic_error("matched an expected collection but no replacement exists");
    return *rep;
}

// Oriented views (u, w, v) of a 3-path variant, endpoints first-to-last and
// reversed. Attachment roles below are always relative to this labeling.
std::array<std::array<int, 3>, 2> orientations(const Path& t) {
    return {{{t.v[0], t.v[1], t.v[2]}, {t.v[2], t.v[1], t.v[0]}}};
}

}  // namespace

const char* op_name(OpKind k) {
    switch (k) {
        case OpKind::Op30_02: return "3-0-by-0-2";
        case OpKind::Op31_03_P21: return "3-1-by-0-3(2.1)";
        case OpKind::Op31_03_P22: return "3-1-by-0-3(2.2)";
        case OpKind::Op41_13: return "4-1-by-1-3";
        case OpKind::Op42_14_C1: return "4-2-by-1-4(c1)";
        case OpKind::Op42_14_C2: return "4-2-by-1-4(c2)";
        case OpKind::Op42_14_C3: return "4-2-by-1-4(c3)";
    }
    return "?";
}

std::vector<Path> path_variants(const Graph& g, const Path& p) {
    if (p.order() != 3) throw std::invalid_argument("variants need a 3-path");
    int a = p.v[0], b = p.v[1], c = p.v[2];
    std::vector<Path> out;
    for (auto [x, y, z] : {std::array{a, b, c}, std::array{b, a, c}, std::array{a, c, b}})
        if (g.has_edge(x, y) && g.has_edge(y, z)) out.push_back(Path{x, y, z});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<std::vector<Path>> construct_replacement(const Graph& g,
                                                       std::vector<int> vertices,
                                                       int j1, int j2) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (j1 < 0 || j2 < 0 || 2 * j1 + 3 * j2 != static_cast<int>(vertices.size()))
        throw std::invalid_argument("target shape does not fit the vertex set");
    if (vertices.size() > 14)
        throw std::invalid_argument("replacement search is limited to 14 vertices");

    std::vector<char> free_v(g.num_vertices() == 0 ? 1 : g.num_vertices(), 0);
    for (int v : vertices) free_v[v] = 1;

    std::vector<Path> chosen;
    std::vector<Path> result;

    auto lowest_free = [&]() {
        for (int v : vertices)
            if (free_v[v]) return v;
        return -1;
    };

    std::function<bool(int, int)> search = [&](int twos_left, int threes_left) {
        int v = lowest_free();
        if (v < 0) return twos_left == 0 && threes_left == 0;
        std::vector<Path> cands;
        if (twos_left > 0)
            for (int a : g.neighbors(v))
                if (free_v[a]) cands.push_back(Path{v, a});
        if (threes_left > 0) {
            for (int a : g.neighbors(v)) {
                if (!free_v[a]) continue;
                for (int b : g.neighbors(a))
                    if (b != v && free_v[b]) cands.push_back(Path{v, a, b});
            }
            for (int a : g.neighbors(v))
                for (int b : g.neighbors(v))
                    if (a < b && free_v[a] && free_v[b]) cands.push_back(Path{a, v, b});
        }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (const Path& c : cands) {
            for (int x : c.v) free_v[x] = 0;
            chosen.push_back(c);
            bool done = c.order() == 2 ? search(twos_left - 1, threes_left)
                                       : search(twos_left, threes_left - 1);
            if (done) return true;
            chosen.pop_back();
            for (int x : c.v) free_v[x] = 1;
        }
        return false;
    };

    if (!search(j1, j2)) return std::nullopt;
    result = chosen;
    std::sort(result.begin(), result.end());
    return result;
}

std::optional<LocalMove> find_op_3_0(const Graph& g, const PathPartition& q,
                                     std::uint64_t* scanned) {
    std::vector<int> two_ids;
    for (int id = 0; id < q.size(); ++id)
        if (q.path(id).order() == 2) two_ids.push_back(id);

    for (int b_id : two_ids) {
        const Path& b = q.path(b_id);
        for (auto [b1, b2] : {std::pair{b.v[0], b.v[1]}, std::pair{b.v[1], b.v[0]}}) {
            for (int x : g.neighbors(b1)) {
                int a_id = q.path_of(x);
                if (!is_two(q, a_id) || a_id == b_id) continue;
                int a_other = other_end(q.path(a_id), x);
                for (int y : g.neighbors(b2)) {
                    bump(scanned);
                    int c_id = q.path_of(y);
                    if (!is_two(q, c_id) || c_id == b_id || c_id == a_id) continue;
                    int c_other = other_end(q.path(c_id), y);
                    // 6-path a_other-x-b1-b2-y-c_other; drop its middle edge
                    return make_move(OpKind::Op30_02, q, {a_id, b_id, c_id},
                                     {Path{a_other, x, b1}, Path{b2, y, c_other}});
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

std::optional<LocalMove> op_3_1_class21(const Graph& g, const PathPartition& q,
                                        const Context& ctx, std::uint64_t* scanned) {
    // The 3-path is dismembered entirely, so rotations change nothing here.
    for (int r : ctx.three_ids) {
        const Path& t = q.path(r);
        for (int z0 : g.neighbors(t.v[0])) {
            int p0 = q.path_of(z0);
            if (!is_two(q, p0)) continue;
            for (int z1 : g.neighbors(t.v[1])) {
                int p1 = q.path_of(z1);
                if (!is_two(q, p1) || p1 == p0) continue;
                for (int z2 : g.neighbors(t.v[2])) {
                    bump(scanned);
                    int p2 = q.path_of(z2);
                    if (!is_two(q, p2) || p2 == p0 || p2 == p1) continue;
                    std::vector<int> ids{p0, p1, p2, r};
                    return make_move(OpKind::Op31_03_P21, q, ids,
                                     replacement_or_throw(g, q, ids, 0, 3));
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<LocalMove> op_3_1_class22(const Graph& g, const PathPartition& q,
                                        const Context& ctx, std::uint64_t* scanned) {
    for (const MergeOption& m : ctx.merges) {
        for (int r : ctx.three_ids) {
            for (const Path& t : path_variants(g, q.path(r))) {
                // configuration (a): singleton reaches the midpoint, the third
                // 2-path hooks one endpoint
                if (g.has_edge(m.singleton, t.v[1])) {
                    for (int e : {t.v[0], t.v[2]}) {
                        for (int z : g.neighbors(e)) {
                            bump(scanned);
                            int p3 = q.path_of(z);
                            if (!is_two(q, p3) || p3 == m.id1 || p3 == m.id2) continue;
                            std::vector<int> ids{m.id1, m.id2, p3, r};
                            return make_move(OpKind::Op31_03_P22, q, ids,
                                             replacement_or_throw(g, q, ids, 0, 3));
                        }
                    }
                }
                // configuration (b): singleton and third 2-path on opposite endpoints
                for (auto [e1, e2] : {std::pair{t.v[0], t.v[2]}, std::pair{t.v[2], t.v[0]}}) {
                    if (!g.has_edge(m.singleton, e1)) continue;
                    for (int z : g.neighbors(e2)) {
                        bump(scanned);
                        int p3 = q.path_of(z);
                        if (!is_two(q, p3) || p3 == m.id1 || p3 == m.id2) continue;
                        std::vector<int> ids{m.id1, m.id2, p3, r};
                        return make_move(OpKind::Op31_03_P22, q, ids,
                                         replacement_or_throw(g, q, ids, 0, 3));
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<LocalMove> op_4_1(const Graph& g, const PathPartition& q,
                                const Context& ctx, std::uint64_t* scanned) {
    for (int r : ctx.three_ids) {
        for (const Path& t : path_variants(g, q.path(r))) {
            for (int u : {t.v[0], t.v[2]}) {
                const auto& nbrs = g.neighbors(u);
                for (std::size_t i = 0; i < nbrs.size(); ++i) {
                    if (ctx.by_singleton[nbrs[i]].empty()) continue;
                    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                        if (ctx.by_singleton[nbrs[j]].empty()) continue;
                        for (int mi : ctx.by_singleton[nbrs[i]]) {
                            for (int mj : ctx.by_singleton[nbrs[j]]) {
                                bump(scanned);
                                const MergeOption& m1 = ctx.merges[mi];
                                const MergeOption& m2 = ctx.merges[mj];
                                if (!merges_disjoint(m1, m2)) continue;
                                std::vector<int> ids{m1.id1, m1.id2, m2.id1, m2.id2, r};
                                return make_move(OpKind::Op41_13, q, ids,
                                                 replacement_or_throw(g, q, ids, 1, 3));
                            }
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// Admissible hook/bridge table per class. Roles (u,w,v)/(u',w',v') follow
// the current orientations; s hooks T5 at u (classes 1, 2) or w (class 3),
// s' hooks T6 at u' (class 1) or w' (classes 2, 3).
bool class_bridge(const Graph& g, int cls, const std::array<int, 3>& t5,
                  const std::array<int, 3>& t6) {
    auto [u, w, v] = t5;
    auto [u2, w2, v2] = t6;
    switch (cls) {
        case 1:
            return g.has_edge(u, v2) || g.has_edge(v, u2) || g.has_edge(w, v2) ||
                   g.has_edge(v, w2) || g.has_edge(v, v2);
        case 2:
            return g.has_edge(u, u2) || g.has_edge(u, v2) || g.has_edge(w, u2) ||
                   g.has_edge(w, v2) || g.has_edge(v, u2) || g.has_edge(v, v2);
        default:
            return g.has_edge(u, u2) || g.has_edge(u, v2) || g.has_edge(v, u2) ||
                   g.has_edge(v, v2);
    }
}

std::optional<LocalMove> op_4_2(const Graph& g, const PathPartition& q,
                                const Context& ctx, std::uint64_t* scanned) {
    static constexpr OpKind kKinds[3] = {OpKind::Op42_14_C1, OpKind::Op42_14_C2,
                                         OpKind::Op42_14_C3};
    for (int cls = 1; cls <= 3; ++cls) {
        for (int r5 : ctx.three_ids) {
            for (int r6 : ctx.three_ids) {
                if (r6 == r5) continue;
                for (const Path& t5p : path_variants(g, q.path(r5))) {
                    for (const Path& t6p : path_variants(g, q.path(r6))) {
                        auto or5 = orientations(t5p);
                        auto or6 = orientations(t6p);
                        // midpoint hooks don't distinguish u/v, one orientation is enough
                        int n5 = cls == 3 ? 1 : 2;
                        int n6 = cls == 1 ? 2 : 1;
                        for (int i5 = 0; i5 < n5; ++i5) {
                            const auto& t5 = or5[i5];
                            int hook5 = cls == 3 ? t5[1] : t5[0];
                            for (int i6 = 0; i6 < n6; ++i6) {
                                const auto& t6 = or6[i6];
                                int hook6 = cls == 1 ? t6[0] : t6[1];
                                if (!class_bridge(g, cls, t5, t6)) continue;
                                for (int s1 : g.neighbors(hook5)) {
                                    if (ctx.by_singleton[s1].empty()) continue;
                                    for (int s2 : g.neighbors(hook6)) {
                                        if (s2 == s1 || ctx.by_singleton[s2].empty())
                                            continue;
                                        for (int mi : ctx.by_singleton[s1]) {
                                            for (int mj : ctx.by_singleton[s2]) {
                                                bump(scanned);
                                                const MergeOption& m1 = ctx.merges[mi];
                                                const MergeOption& m2 = ctx.merges[mj];
                                                if (!merges_disjoint(m1, m2)) continue;
                                                std::vector<int> ids{m1.id1, m1.id2,
                                                                     m2.id1, m2.id2,
                                                                     r5,     r6};
                                                return make_move(
                                                    kKinds[cls - 1], q, ids,
                                                    replacement_or_throw(g, q, ids, 1, 4));
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<LocalMove> find_op_3_1(const Graph& g, const PathPartition& q,
                                     Class31 cls, std::uint64_t* scanned) {
    Context ctx = build_context(g, q);
    return cls == Class31::C21 ? op_3_1_class21(g, q, ctx, scanned)
                               : op_3_1_class22(g, q, ctx, scanned);
}

std::optional<LocalMove> find_op_4_1(const Graph& g, const PathPartition& q,
                                     std::uint64_t* scanned) {
    Context ctx = build_context(g, q);
    return op_4_1(g, q, ctx, scanned);
}

std::optional<LocalMove> find_op_4_2(const Graph& g, const PathPartition& q,
                                     std::uint64_t* scanned) {
    Context ctx = build_context(g, q);
    return op_4_2(g, q, ctx, scanned);
}

std::optional<LocalMove> find_first_move(const Graph& g, const PathPartition& q,
                                         std::uint64_t* scanned) {
    if (auto mv = find_op_3_0(g, q, scanned)) return mv;
    Context ctx = build_context(g, q);
    if (auto mv = op_3_1_class21(g, q, ctx, scanned)) return mv;
    if (auto mv = op_3_1_class22(g, q, ctx, scanned)) return mv;
    if (auto mv = op_4_1(g, q, ctx, scanned)) return mv;
    if (auto mv = op_4_2(g, q, ctx, scanned)) return mv;
    return std::nullopt;
}

void apply_move(const Graph& g, PathPartition& q, const LocalMove& mv) {
    if (mv.removed_ids.size() != mv.removed.size())
        throw std::invalid_argument("malformed move");
    if (mv.removed.size() != mv.added.size() + 1)
        throw std::invalid_argument("move must shrink the cover by exactly one path");
    for (std::size_t i = 0; i < mv.removed_ids.size(); ++i) {
        int id = mv.removed_ids[i];
        if (id < 0 || id >= q.size() || !(q.path(id) == mv.removed[i]))
            throw std::invalid_argument("stale move: path " + std::to_string(id) +
                                        " no longer matches");
    }
    std::vector<int> before, after;
    for (const Path& p : mv.removed) {
        if (p.order() == 1) throw std::invalid_argument("move removes a 1-path");
        before.insert(before.end(), p.v.begin(), p.v.end());
    }
    for (const Path& p : mv.added) {
        if (p.order() == 1) throw std::invalid_argument("move adds a 1-path");
        after.insert(after.end(), p.v.begin(), p.v.end());
        for (std::size_t i = 0; i + 1 < p.v.size(); ++i)
            if (!g.has_edge(p.v[i], p.v[i + 1]))
                throw std::invalid_argument("move adds path with non-edge");
    }
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    if (before != after)
        throw std::invalid_argument("move changes the covered vertex set");
    q.replace(mv.removed_ids, mv.added);
}

SolveOutcome solve(const Graph& g, const SolveOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    SolveOutcome out;
    SolveReport& rep = out.report;

    if (opts.initial) {
        out.partition = *opts.initial;
        ValidationReport vr = validate(g, out.partition);
        if (!vr.ok())
            throw SeedError("injected starting cover invalid: " + vr.violations.front());
        try {
            OracleResult r = min_singletons_exact(g, opts.oracle_cap);
            rep.seed_exact = stats(out.partition).c1 == r.best_stats.c1;
            rep.seed_checked = true;
        } catch (const OverCapError&) {
            rep.seed_exact = false;
            rep.seed_checked = false;
        }
    } else {
        if (opts.seed.exact_threshold < 1)
            throw std::invalid_argument("exact threshold must be at least 1");
        SeedResult sr = initial_partition(g, opts.seed, opts.oracle_cap);
        out.partition = std::move(sr.partition);
        rep.seed_exact = sr.exact;
        rep.seed_checked = sr.exact;
    }
    rep.initial_stats = stats(out.partition);

    while (true) {
        std::uint64_t scanned = 0;
        auto mv = find_first_move(g, out.partition, &scanned);
        rep.scans_per_iteration.push_back(scanned);
        rep.total_scans += scanned;
        if (!mv) break;
        apply_move(g, out.partition, *mv);
        ++rep.op_counts[static_cast<int>(mv->kind)];
        ++rep.iterations;
        if (opts.record_trace) rep.trace.push_back(std::move(*mv));
    }

    rep.final_stats = stats(out.partition);
    if (rep.initial_stats.total() - rep.final_stats.total() != rep.iterations)
        throw std::logic_error("iteration accounting out of step");
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return out;
}

}  // namespace tpp
