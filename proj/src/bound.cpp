#include "mopdom/bound.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mopdom/dual_tree.hpp"
#include "mopdom/leaf_walk.hpp"

namespace mopdom {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    for (int x : a)
        if (!std::binary_search(b.begin(), b.end(), x)) out.push_back(x);
    return out;
}

// ---------------------------------------------------------------------------
// Small orders (7 <= n <= 12)
// ---------------------------------------------------------------------------

struct SmallResult {
    DisjunctiveSet set;
    bool fallback = false;
    std::vector<std::string> anomalies;
};

// Last-resort scan: smallest verifying set up to the bound, then exact.
bool guard_scan(const Mop& m, const CoverageChecker& cc, int cap,
                DisjunctiveSet& out) {
    for (int r = 1; r <= cap; ++r) {
        std::vector<int> c(r);
        for (int i = 0; i < r; ++i) c[i] = i;
        while (true) {
            if (cc.is_2dd(c)) {
                out.vertices = c;
                out.verified = true;
                return true;
            }
            int i = r - 1;
            while (i >= 0 && c[i] == m.n - r + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
        }
    }
    return false;
}

bool pair_scan(const Mop& m, const CoverageChecker& cc, DisjunctiveSet& out) {
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j)
            if (cc.is_2dd({i, j})) {
                out.vertices = {i, j};
                out.verified = true;
                return true;
            }
    return false;
}

// The n = 10 construction: split on a partition diagonal; a side with 4
// outer edges has a hub vertex which, together with the middle vertex of the
// far side, forms a 2DD-set; when both sides have 5 outer edges the diagonal
// endpoints themselves do.
std::vector<std::vector<int>> ten_candidates(const Mop& m) {
    std::vector<std::vector<int>> cands;
    int n = m.n;
    auto adj = adjacency_lists(m);
    auto adjacent = [&](int u, int v) {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    };
    for (auto [a, b] : m.diagonals) {
        struct Side { int lo, hi, edges; };
        for (auto s : {Side{a, b, b - a}, Side{b, a + n, n - (b - a)}}) {
            if (s.edges == 4) {
                std::vector<int> verts;
                for (int v = s.lo; v <= s.hi; ++v) verts.push_back(v % n);
                for (int h : verts) {
                    bool hub = true;
                    for (int v : verts)
                        if (v != h && !adjacent(h, v)) hub = false;
                    if (hub) cands.push_back({h, (s.hi + 3) % n});
                }
            } else if (s.edges == 5) {
                cands.push_back({s.lo % n, s.hi % n});
            }
        }
    }
    for (auto& c : cands) std::sort(c.begin(), c.end());
    return cands;
}

SmallResult construct_small_impl(const Mop& m) {
    SmallResult res;
    CoverageChecker cc(m);
    int n = m.n;
    int bound = disjunctive_bound(n, degree_two_count(m));

    auto accept = [&](std::vector<int> s) {
        std::sort(s.begin(), s.end());
        if ((int)s.size() > bound || !cc.is_2dd(s)) return false;
        res.set.vertices = s;
        res.set.verified = true;
        return true;
    };

    if (n == 7 || n == 8) {
        for (int i = 0; i < n; ++i)
            if (accept({i, (i + 4) % n})) return res;
    } else if (n == 9) {
        for (int d = 0; d < 9; ++d)
            if (degree(m, d) == 2 && accept({(d + 8) % 9, (d + 4) % 9}))
                return res;
    } else if (n == 10) {
        for (auto& c : ten_candidates(m))
            if (accept(c)) return res;
        res.anomalies.push_back("n=10 partition construction failed; pair scan used");
        DisjunctiveSet s;
        if (pair_scan(m, cc, s) && (int)s.vertices.size() <= bound) {
            res.set = s;
            return res;
        }
    } else if (n == 11) {
        if (internal_triangle_count(m) > 0) {
            if (accept({0, 4, 8})) return res;
        } else {
            DisjunctiveSet s;
            if (pair_scan(m, cc, s) && (int)s.vertices.size() <= bound) {
                res.set = s;
                return res;
            }
        }
    } else if (n == 12) {
        if (accept({0, 4, 8})) return res;
    } else {
        throw std::invalid_argument("construct_small needs 7 <= n <= 12");
    }

    res.fallback = true;
    res.anomalies.push_back("small construction for n=" + std::to_string(n) +
                            " missed; exhaustive scan used");
    DisjunctiveSet s;
    if (guard_scan(m, cc, bound, s)) {
        res.set = s;
        return res;
    }
    auto ex = exact_gamma2d(m);
    res.set = ex.witness;
    res.anomalies.push_back("exact minimum exceeds the bound at n=" +
                            std::to_string(n));
    return res;
}

// ---------------------------------------------------------------------------
// Step application
// ---------------------------------------------------------------------------

struct Applied {
    Mop m1;
    std::vector<int> to_old;  // m1 label -> label of the step's mop
    int merged_new = -1;
    std::pair<int, int> merged_old{-1, -1};
};

std::optional<Applied> apply_candidate(const Mop& m, const ReductionStep& step) {
    auto del = try_delete_vertices(m, step.deleted);
    if (!del) return std::nullopt;
    Applied ap;
    if (step.contracted) {
        auto [a, b] = *step.contracted;
        if (a < 0 || a >= m.n || b < 0 || b >= m.n) return std::nullopt;
        int a1 = del->from_old[a], b1 = del->from_old[b];
        if (a1 < 0 || b1 < 0) return std::nullopt;
        if (del->result.n < 4 || !is_outer_edge(del->result, a1, b1))
            return std::nullopt;
        auto con = contract_outer_edge(del->result, {a1, b1});
        ap.m1 = con.result;
        ap.merged_new = con.merged_new;
        ap.merged_old = {del->to_old[con.merged_old.first],
                         del->to_old[con.merged_old.second]};
        ap.to_old.resize(ap.m1.n);
        for (int i = 0; i < ap.m1.n; ++i)
            ap.to_old[i] = del->to_old[con.to_old[i]];
    } else {
        ap.m1 = del->result;
        ap.to_old = del->to_old;
    }
    if (!is_valid(ap.m1)) return std::nullopt;
    return ap;
}

struct LiftOutcome {
    std::vector<int> set;      // final set, labels of the step's mop
    std::vector<int> augment;  // net additions beyond the mapped sub-solution
};

std::optional<LiftOutcome> lift_search(const CoverageChecker& cc,
                                       const ReductionStep& step,
                                       const Applied& ap,
                                       const std::vector<int>& sub,
                                       int target) {
    bool merged_in = false;
    std::vector<int> base;
    for (int v : sub) {
        if (ap.merged_new >= 0 && v == ap.merged_new) {
            merged_in = true;
            continue;
        }
        base.push_back(ap.to_old[v]);
    }
    base = sorted_unique(base);

    auto try_set = [&](std::vector<int> s) -> std::optional<LiftOutcome> {
        s = sorted_unique(s);
        if ((int)s.size() > target || !cc.is_2dd(s)) return std::nullopt;
        return LiftOutcome{s, set_minus(s, base)};
    };
    auto contains_all = [](const std::vector<int>& s, const std::vector<int>& req) {
        for (int v : req)
            if (!std::binary_search(s.begin(), s.end(), v)) return false;
        return true;
    };
    auto apply_rule = [&](std::vector<int> s, const LiftRule& lr) {
        for (int v : lr.remove)
            s.erase(std::remove(s.begin(), s.end(), v), s.end());
        for (int v : lr.add) s.push_back(v);
        return s;
    };

    for (const auto& lr : step.lifts) {
        if (lr.when == LiftRule::When::MergedIn && !merged_in) continue;
        if (lr.when != LiftRule::When::MergedIn && merged_in) continue;
        if (lr.when == LiftRule::When::ContainsAll && !contains_all(base, lr.trigger))
            continue;
        if (auto ok = try_set(apply_rule(base, lr))) return ok;
    }
    std::vector<std::vector<int>> bases;
    if (merged_in) {
        auto [a, b] = ap.merged_old;
        for (auto exp : {std::vector<int>{a, b}, {a}, {b}}) {
            auto b2 = base;
            b2.insert(b2.end(), exp.begin(), exp.end());
            b2 = sorted_unique(b2);
            for (const auto& lr : step.lifts) {
                if (lr.when == LiftRule::When::MergedIn) continue;
                if (lr.when == LiftRule::When::ContainsAll &&
                    !contains_all(b2, lr.trigger))
                    continue;
                if (auto ok = try_set(apply_rule(b2, lr))) return ok;
            }
            bases.push_back(b2);
        }
    } else {
        bases.push_back(base);
    }

    // Verified augmentation search over the step's vertex pool.
    std::vector<int> pool = step.augment_pool;
    pool.insert(pool.end(), step.deleted.begin(), step.deleted.end());
    if (ap.merged_new >= 0) {
        pool.push_back(ap.merged_old.first);
        pool.push_back(ap.merged_old.second);
    }
    pool = sorted_unique(pool);
    if (pool.size() > 18) pool.resize(18);
    for (const auto& bs : bases) {
        int g_max = std::min(target - (int)bs.size(), 3);
        for (int g = 0; g <= g_max; ++g) {
            std::vector<int> c(g);
            for (int i = 0; i < g; ++i) c[i] = i;
            while (true) {
                auto s = bs;
                for (int i : c) s.push_back(pool[i]);
                if (auto ok = try_set(s)) return ok;
                if (g == 0) break;
                int i = g - 1;
                while (i >= 0 && c[i] == (int)pool.size() - g + i) --i;
                if (i < 0) break;
                ++c[i];
                for (int j = i + 1; j < g; ++j) c[j] = c[j - 1] + 1;
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rule instantiation
// ---------------------------------------------------------------------------

LiftRule merged_rule(std::vector<int> add) {
    return {LiftRule::When::MergedIn, {}, {}, std::move(add)};
}
LiftRule otherwise_rule(std::vector<int> add) {
    return {LiftRule::When::Otherwise, {}, {}, std::move(add)};
}

// The leaf-walk reductions.  Labels follow the chain naming of LeafWalk.
std::optional<ReductionStep> lem1_candidate(const Mop& m, const DualTree& t,
                                            int leaf) {
    auto w = walk_leaf_triangles(m, t, leaf, 9);
    int steps = (int)w.F.size() - 1;
    if (steps < 4) return std::nullopt;
    if (w.dist >= 1 && w.dist <= 2) return std::nullopt;
    auto U = [&](int i) { return w.u[i]; };
    auto inF = [&](int i, int lab) {
        if (steps < i || w.u[lab] < 0) return false;
        const auto& f = w.F[i];
        return f[0] == w.u[lab] || f[1] == w.u[lab] || f[2] == w.u[lab];
    };
    auto mk = [&](std::string id, std::vector<int> del,
                  std::optional<std::pair<int, int>> contract,
                  std::vector<LiftRule> lifts, int budget) {
        ReductionStep s;
        s.rule_id = std::move(id);
        for (int l : del) s.deleted.push_back(U(l));
        s.deleted = sorted_unique(s.deleted);
        if (contract) s.contracted = {U(contract->first), U(contract->second)};
        s.budget = budget;
        for (int i = 1; i <= 11; ++i)
            if (w.u[i] >= 0) s.augment_pool.push_back(w.u[i]);
        // Small remainder: solve directly instead of contracting.
        if (s.contracted && m.n - (int)s.deleted.size() <= 7) {
            s.contracted.reset();
            s.rule_id += "-S";
            std::vector<LiftRule> kept;
            for (auto& lr : lifts)
                if (lr.when != LiftRule::When::MergedIn) kept.push_back(lr);
            lifts = kept;
        }
        for (auto& lr : lifts) {
            auto fix = [&](std::vector<int>& xs) {
                for (int& x : xs) x = U(x);
            };
            fix(lr.trigger);
            fix(lr.remove);
            fix(lr.add);
            s.lifts.push_back(lr);
        }
        return s;
    };

    if (w.dist == 3) {
        if (inF(4, 2))
            return mk("LEM1-3DIST-A", {1, 3, 4}, {{2, 5}},
                      {merged_rule({2, 5}), otherwise_rule({2})}, 1);
        if (inF(4, 4))
            return mk("LEM1-3DIST-B", {1, 2, 3}, {{4, 5}},
                      {merged_rule({4, 5}), otherwise_rule({2})}, 1);
        return std::nullopt;
    }
    // From here on, t2..t4 have tree degree 2.
    if (inF(4, 2)) {
        if (steps < 5) return std::nullopt;
        if (inF(5, 2))
            return mk("LEM1-NOTF4-A", {1, 3, 4, 5}, {{2, 6}},
                      {merged_rule({2, 6}), otherwise_rule({2})}, 1);
        if (inF(5, 5))
            return mk("LEM1-NOTF4-B", {1, 2, 3, 4}, {{5, 6}},
                      {merged_rule({5, 6}), otherwise_rule({2})}, 1);
        return std::nullopt;
    }
    if (!inF(4, 4)) return std::nullopt;
    if (w.dist == 4) {
        if (inF(5, 4))
            return mk("LEM1-4DIST-A", {1, 2, 3, 5}, std::nullopt,
                      {otherwise_rule({2})}, 1);
        if (inF(5, 5))
            return mk("LEM1-4DIST-B", {1, 2, 3, 4}, std::nullopt,
                      {otherwise_rule({2})}, 1);
        return std::nullopt;
    }
    if (steps < 6) return std::nullopt;
    if (inF(6, 6))
        return mk("LEM1-5DIST", {1, 2, 3, 4, 5}, std::nullopt,
                  {otherwise_rule({2})}, 1);
    if (w.dist == 5 || w.dist == 6) return std::nullopt;  // H1/H2, H5..H8
    if (w.dist == 7 && steps >= 8) {
        for (int x : {5, 8, 7, 4}) {
            if (!inF(8, x)) continue;
            std::vector<int> del;
            for (int i = 1; i <= 8; ++i)
                if (i != x) del.push_back(i);
            static const char* tag[] = {"", "", "", "", "D", "A", "", "C", "B"};
            return mk(std::string("LEM1-7DIST-") + tag[x], del, {{x, 9}},
                      {merged_rule({2, x, 9}), otherwise_rule({2, x})}, 2);
        }
        return std::nullopt;
    }
    if (w.dist == -1 || w.dist >= 8) {
        if (steps < 9) return std::nullopt;
        for (int x : {5, 9, 8, 7, 4}) {
            if (!inF(9, x)) continue;
            std::vector<int> del;
            for (int i = 1; i <= 9; ++i)
                if (i != x) del.push_back(i);
            static const char* num[] = {"", "", "", "", "5", "1", "", "4", "3", "2"};
            return mk(std::string("LEM1-CASE") + num[x], del, {{x, 10}},
                      {merged_rule({2, x, 10}), otherwise_rule({2, x})}, 2);
        }
    }
    return std::nullopt;
}

std::array<int, 3> tri_of(const DualTree& t, int id) { return t.tris[id]; }

bool in_tri(const std::array<int, 3>& f, int v) {
    return f[0] == v || f[1] == v || f[2] == v;
}

// The cherry with two ear children: delete the shared vertex and both ear
// tips, contract the root's remaining edge.
std::optional<ReductionStep> tree1_candidate(const DualTree& rt, int w) {
    auto A = tri_of(rt, w);
    auto B1 = tri_of(rt, rt.children[w][0]);
    auto B2 = tri_of(rt, rt.children[w][1]);
    int v3 = -1;
    for (int v : A)
        if (in_tri(B1, v) && in_tri(B2, v)) v3 = v;
    if (v3 < 0) return std::nullopt;
    std::vector<int> v12;
    for (int v : A)
        if (v != v3) v12.push_back(v);
    int v4 = -1, v5 = -1;
    for (int v : B1)
        if (!in_tri(A, v)) v4 = v;
    for (int v : B2)
        if (!in_tri(A, v)) v5 = v;
    ReductionStep s;
    s.rule_id = "TREE1";
    s.deleted = sorted_unique({v3, v4, v5});
    s.contracted = {v12[0], v12[1]};
    s.lifts = {merged_rule(v12), otherwise_rule({v3})};
    s.budget = 1;
    s.augment_pool = {v12[0], v12[1], v3, v4, v5};
    return s;
}

// Legs (1,2): when both triangles of the longer chain meet the shared vertex
// (region H9), delete the four interior vertices and add the shared vertex.
std::optional<ReductionStep> h9_candidate(const DualTree& rt, int w, int leg1,
                                          int leg2) {
    auto A = tri_of(rt, w);
    auto B = tri_of(rt, leg1);
    auto C = tri_of(rt, leg2);
    auto D2 = tri_of(rt, rt.children[leg2][0]);
    int v3 = -1;
    for (int v : A)
        if (in_tri(B, v) && in_tri(C, v)) v3 = v;
    if (v3 < 0 || !in_tri(D2, v3)) return std::nullopt;  // H10: no reduction
    std::vector<int> del{v3};
    std::vector<int> pool(A.begin(), A.end());
    for (auto& f : {B, C, D2})
        for (int v : f)
            if (!in_tri(A, v)) {
                del.push_back(v);
                pool.push_back(v);
            }
    ReductionStep s;
    s.rule_id = "CL3TO10-H9";
    s.deleted = sorted_unique(del);
    s.lifts = {otherwise_rule({v3})};
    s.budget = 1;
    s.augment_pool = sorted_unique(pool);
    return s;
}

// Legs (2,2): regions H11/H12 delete the four chain vertices; H13 has no
// direct reduction.
std::optional<ReductionStep> h11_candidate(const DualTree& rt, int w, int c,
                                           int d) {
    auto A = tri_of(rt, w);
    auto C1 = tri_of(rt, c), C2 = tri_of(rt, rt.children[c][0]);
    auto D1 = tri_of(rt, d), D2 = tri_of(rt, rt.children[d][0]);
    int v3 = -1;
    for (int v : A)
        if (in_tri(C1, v) && in_tri(D1, v)) v3 = v;
    if (v3 < 0) return std::nullopt;
    int vc = -1, vd = -1;
    for (int v : A) {
        if (v == v3) continue;
        if (in_tri(C1, v)) vc = v;
        if (in_tri(D1, v)) vd = v;
    }
    bool fan_c = in_tri(C2, v3), fan_d = in_tri(D2, v3);
    if (!fan_c && !fan_d) return std::nullopt;  // H13
    std::vector<int> del;
    for (auto& f : {C1, C2, D1, D2})
        for (int v : f)
            if (!in_tri(A, v)) del.push_back(v);
    ReductionStep s;
    s.deleted = sorted_unique(del);
    s.budget = 1;
    s.augment_pool = s.deleted;
    s.augment_pool.push_back(v3);
    s.augment_pool.push_back(vc);
    s.augment_pool.push_back(vd);
    s.augment_pool = sorted_unique(s.augment_pool);
    if (fan_c && fan_d) {
        s.rule_id = "CL10TO21-H11";
        s.lifts = {otherwise_rule({v3})};
    } else {
        s.rule_id = "CL10TO21-H12";
        s.lifts = {
            {LiftRule::When::ContainsAll, {v3}, {v3}, {vc, vd}},
            {LiftRule::When::ContainsAll, {vc}, {}, {v3}},
            {LiftRule::When::ContainsAll, {vd}, {}, {v3}},
            otherwise_rule({vd}),
            otherwise_rule({vc}),
        };
    }
    return s;
}

// Verified region reducer for the remaining branch shapes: delete a
// contiguous stretch of the branch region's boundary arc, optionally
// contract the newly adjacent pair, and let the lift search find the
// augmentation.
std::vector<ReductionStep> generic_candidates(const Mop& m, const DualTree& rt,
                                              int w) {
    std::vector<ReductionStep> out;
    if (rt.parent[w] < 0) return out;
    // Region: all triangles of the maximal subtree at w.
    std::set<int> verts;
    std::vector<int> stack{w};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int v : rt.tris[x]) verts.insert(v);
        for (int y : rt.children[x]) stack.push_back(y);
    }
    // Closing diagonal: the edge shared with the parent triangle.
    std::vector<int> shared;
    for (int v : rt.tris[w])
        if (in_tri(rt.tris[rt.parent[w]], v)) shared.push_back(v);
    if (shared.size() != 2) return out;
    int p = shared[0], q = shared[1];
    auto arc_from = [&](int start, int stop, int dir) {
        std::vector<int> arc{start};
        for (int v = (start + dir + m.n) % m.n; arc.back() != stop;
             v = (v + dir + m.n) % m.n) {
            arc.push_back(v);
            if ((int)arc.size() > m.n) return std::vector<int>{};
        }
        return arc;
    };
    auto matches = [&](const std::vector<int>& arc) {
        if (arc.size() != verts.size()) return false;
        for (int v : arc)
            if (!verts.count(v)) return false;
        return true;
    };
    std::vector<int> arc = arc_from(p, q, 1);
    if (!matches(arc)) {
        arc = arc_from(p, q, -1);
        if (!matches(arc)) return out;
    }
    int l = (int)arc.size();
    if (l < 4) return out;
    std::vector<int> interior(arc.begin() + 1, arc.end() - 1);

    auto push = [&](std::vector<int> del, std::optional<std::pair<int, int>> con) {
        ReductionStep s;
        s.rule_id = "TREE-GEN";
        s.deleted = sorted_unique(std::move(del));
        s.contracted = con;
        s.augment_pool.assign(arc.begin(), arc.end());
        out.push_back(std::move(s));
    };

    push(interior, std::pair{p, q});
    push(interior, std::nullopt);
    for (int h : interior) {
        auto del = interior;
        del.erase(std::remove(del.begin(), del.end(), h), del.end());
        push(del, std::pair{p, h});
        push(del, std::pair{h, q});
        push(del, std::nullopt);
    }
    for (int len = l - 3; len >= 3 && (int)out.size() < 60; --len)
        for (int s0 = 1; s0 + len <= l - 1; ++s0) {
            std::vector<int> del(arc.begin() + s0, arc.begin() + s0 + len);
            push(del, std::pair{arc[s0 - 1], arc[s0 + len]});
            push(del, std::nullopt);
        }
    if (out.size() > 60) out.resize(60);
    return out;
}

std::vector<ReductionStep> generate_candidates(const Mop& m) {
    std::vector<ReductionStep> cands;
    DualTree t = build_dual(m);
    for (int id = 0; id < t.node_count(); ++id) {
        if (t.tree_degree(id) != 1) continue;
        if (auto c = lem1_candidate(m, t, id)) cands.push_back(std::move(*c));
    }
    bool has_branch = false;
    for (int id = 0; id < t.node_count(); ++id)
        if (t.tree_degree(id) == 3) has_branch = true;
    if (!has_branch) return cands;

    DualTree rt = root_at_diametrical_leaf(t);
    int nn = rt.node_count();
    std::vector<int> chain_len(nn, -1), order;
    {
        std::queue<int> q;
        q.push(rt.root);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            order.push_back(x);
            for (int y : rt.children[x]) q.push(y);
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int v = *it;
            if (rt.children[v].empty()) chain_len[v] = 1;
            else if (rt.children[v].size() == 1 &&
                     chain_len[rt.children[v][0]] > 0)
                chain_len[v] = 1 + chain_len[rt.children[v][0]];
        }
    }
    auto legs_of = [&](int w) -> std::optional<std::vector<std::pair<int, int>>> {
        if (rt.children[w].size() < 2) return std::nullopt;
        std::vector<std::pair<int, int>> legs;  // (length, child id)
        for (int c : rt.children[w]) {
            if (chain_len[c] < 0) return std::nullopt;
            legs.push_back({chain_len[c], c});
        }
        std::sort(legs.begin(), legs.end());
        return legs;
    };
    for (int w = 0; w < nn; ++w) {
        auto legs = legs_of(w);
        if (!legs || legs->size() != 2) continue;
        int la = (*legs)[0].first, lb = (*legs)[1].first;
        int ca = (*legs)[0].second, cb = (*legs)[1].second;
        if (la == 1 && lb == 1) {
            if (auto c = tree1_candidate(rt, w)) cands.push_back(std::move(*c));
        } else if (la == 1 && lb == 2) {
            if (auto c = h9_candidate(rt, w, ca, cb)) cands.push_back(std::move(*c));
        } else if (la == 2 && lb == 2) {
            if (auto c = h11_candidate(rt, w, ca, cb)) cands.push_back(std::move(*c));
        }
    }
    try {
        auto sm = match_maximal_subtree(rt);
        auto gen = generic_candidates(m, rt, sm.subtree_root);
        for (auto& c : gen) cands.push_back(std::move(c));
    } catch (const std::exception&) {
        // no branch with chain legs; leaf rules alone must carry this mop
    }
    return cands;
}

constexpr int kMaxTries = 24;
constexpr int kMaxDepth = 64;

ConstructionTrace construct_impl(const Mop& m, int depth) {
    ConstructionTrace tr;
    int k = degree_two_count(m);
    int B = disjunctive_bound(m.n, k);
    tr.bound_value = B;

    if (m.n <= 12) {
        auto sr = construct_small_impl(m);
        tr.final_set = sr.set;
        tr.base_case = "SMALL-" + std::to_string(m.n);
        tr.used_fallback = sr.fallback;
        tr.anomalies = sr.anomalies;
        return tr;
    }

    CoverageChecker cc(m);
    if (depth < kMaxDepth) {
        auto cands = generate_candidates(m);
        int tried = 0;
        for (auto& cand : cands) {
            if (tried >= kMaxTries) break;
            auto ap = apply_candidate(m, cand);
            if (!ap) continue;
            ++tried;
            int n1 = ap->m1.n;
            if (n1 < 3) continue;
            int k1 = degree_two_count(ap->m1);
            if (n1 >= 7 && disjunctive_bound(n1, k1) > B) continue;

            DisjunctiveSet sub;
            ConstructionTrace subtr;
            bool sub_small_exact = false;
            if (n1 < 7) {
                sub = exact_gamma2d(ap->m1).witness;
                sub_small_exact = true;
            } else {
                subtr = construct_impl(ap->m1, depth + 1);
                sub = subtr.final_set;
                if (!sub.verified.value_or(false)) continue;
            }
            auto lifted = lift_search(cc, cand, *ap, sub.vertices, B);
            if (!lifted) {
                if (cand.rule_id.rfind("TREE-GEN", 0) != 0)
                    tr.anomalies.push_back("lift failed for rule " + cand.rule_id);
                continue;
            }
            cand.n_before = m.n;
            cand.n_after = n1;
            cand.k_before = k;
            cand.k_after = k1;
            cand.augment_used = lifted->augment;
            tr.steps.push_back(cand);
            for (auto& st : subtr.steps) tr.steps.push_back(st);
            tr.base_case = sub_small_exact ? "EXACT-SMALL" : subtr.base_case;
            tr.used_fallback = subtr.used_fallback;
            for (auto& a : subtr.anomalies) tr.anomalies.push_back(a);
            tr.final_set.vertices = lifted->set;
            tr.final_set.verified = true;
            return tr;
        }
    }

    tr.used_fallback = true;
    tr.anomalies.push_back("no reduction produced a verified lift within bound at n=" +
                           std::to_string(m.n));
    if (m.n <= 20) {
        tr.final_set = exact_gamma2d(m).witness;
        tr.base_case = "EXACT-FALLBACK";
        if (tr.final_set.size() > B)
            tr.anomalies.push_back("exact minimum exceeds the bound");
    } else {
        tr.final_set = greedy_2dd(m);
        tr.base_case = "GREEDY-FALLBACK";
    }
    return tr;
}

}  // namespace

DisjunctiveSet construct_small(const Mop& m) {
    return construct_small_impl(m).set;
}

std::optional<ReductionStep> find_applicable_reduction(const Mop& m) {
    if (m.n < 13)
        throw std::invalid_argument("find_applicable_reduction needs n >= 13");
    for (auto& cand : generate_candidates(m))
        if (apply_candidate(m, cand)) return cand;
    return std::nullopt;
}

DisjunctiveSet apply_and_lift(const Mop& m, const ReductionStep& step,
                              const DisjunctiveSet& sub) {
    auto ap = apply_candidate(m, step);
    if (!ap) throw std::runtime_error("step does not apply to this mop");
    CoverageChecker cc(m);
    int B = disjunctive_bound(m.n, degree_two_count(m));
    auto lifted = lift_search(cc, step, *ap, sub.vertices, B);
    if (!lifted)
        throw std::runtime_error("lift produced no verified 2DD-set for rule " +
                                 step.rule_id);
    DisjunctiveSet out;
    out.vertices = lifted->set;
    out.verified = true;
    return out;
}

ConstructionTrace construct_bounded_2dd(const Mop& m) {
    if (m.n < 7)
        throw std::invalid_argument("construct_bounded_2dd needs n >= 7");
    if (!is_valid(m))
        throw std::invalid_argument("construct_bounded_2dd: invalid mop");
    return construct_impl(m, 0);
}

const std::vector<RuleTemplate>& reduction_catalogue() {
    static const std::vector<RuleTemplate> table = {
        {"LEM1-3DIST-A", "branch at walk distance 3, F4 meets u2", 4, 1, true, 1},
        {"LEM1-3DIST-B", "branch at walk distance 3, F4 meets u4", 4, 1, true, 1},
        {"LEM1-NOTF4-A", "F4 meets u2, F5 meets u2", 5, 1, true, 1},
        {"LEM1-NOTF4-B", "F4 meets u2, F5 meets u5", 5, 1, true, 1},
        {"LEM1-4DIST-A", "branch at walk distance 4, F5 meets u4", 4, 1, false, 1},
        {"LEM1-4DIST-B", "branch at walk distance 4, F5 meets u5", 4, 1, false, 1},
        {"LEM1-5DIST", "F6 = {u6,u7,u8}", 5, 1, false, 1},
        {"LEM1-7DIST-A", "branch at walk distance 7, F8 meets u5", 8, 1, true, 2},
        {"LEM1-7DIST-B", "branch at walk distance 7, F8 meets u8", 8, 1, true, 2},
        {"LEM1-7DIST-C", "branch at walk distance 7, F8 meets u7", 8, 1, true, 2},
        {"LEM1-7DIST-D", "branch at walk distance 7, F8 meets u4", 8, 1, true, 2},
        {"LEM1-CASE1", "walk distance >= 8, F9 meets u5", 9, 1, true, 2},
        {"LEM1-CASE2", "walk distance >= 8, F9 meets u9", 9, 1, true, 2},
        {"LEM1-CASE3", "walk distance >= 8, F9 meets u8", 9, 1, true, 2},
        {"LEM1-CASE4", "walk distance >= 8, F9 meets u7", 9, 1, true, 2},
        {"LEM1-CASE5", "walk distance >= 8, F9 meets u4", 9, 1, true, 2},
        {"TREE1", "branch with two ear children", 4, 1, true, 1},
        {"CL3TO10-H9", "legs (1,2), both chain triangles meet the shared vertex", 4, 1, false, 1},
        {"CL10TO21-H11", "legs (2,2), both chains fan at the shared vertex", 4, 1, false, 1},
        {"CL10TO21-H12", "legs (2,2), exactly one chain fans at the shared vertex", 4, 1, false, 1},
        {"TREE-GEN", "verified arc deletion at the deepest branch region", 0, 0, false, 0},
    };
    return table;
}

bool catalogue_budget_sound() {
    for (const auto& r : reduction_catalogue())
        if (r.budget > 0 && 2 * (r.n_drop + r.k_drop_min) < 9 * r.budget)
            return false;
    return true;
}

std::string trace_to_jsonl(const ConstructionTrace& t) {
    std::ostringstream os;
    for (const auto& s : t.steps) {
        nlohmann::json j;
        j["rule_id"] = s.rule_id;
        j["deleted"] = s.deleted;
        if (s.contracted)
            j["contracted"] = {s.contracted->first, s.contracted->second};
        else
            j["contracted"] = nullptr;
        j["augment"] = s.augment_used;
        j["n_before"] = s.n_before;
        j["n_after"] = s.n_after;
        j["k_before"] = s.k_before;
        j["k_after"] = s.k_after;
        os << j.dump() << "\n";
    }
    return os.str();
}

}  // namespace mopdom
