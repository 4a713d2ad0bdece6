#include "mopdom/dual_tree.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "mopdom/leaf_walk.hpp"

namespace mopdom {

DualTree build_dual(const Mop& m) {
    if (!is_valid(m)) throw std::invalid_argument("build_dual: invalid mop");
    DualTree t;
    t.tris = faces(m);
    t.adj.resize(t.tris.size());
    std::map<std::pair<int, int>, std::vector<int>> by_edge;
    for (int id = 0; id < (int)t.tris.size(); ++id) {
        auto [a, b, c] = t.tris[id];
        for (auto e : {std::pair{a, b}, std::pair{b, c}, std::pair{a, c}})
            if (!is_outer_edge(m, e.first, e.second))
                by_edge[e].push_back(id);
    }
    for (auto& [e, ids] : by_edge) {
        if (ids.size() != 2)
            throw std::logic_error("diagonal not shared by exactly two faces");
        t.adj[ids[0]].push_back(ids[1]);
        t.adj[ids[1]].push_back(ids[0]);
    }
    for (auto& v : t.adj) std::sort(v.begin(), v.end());
    return t;
}

namespace {

std::vector<int> bfs_dist(const DualTree& t, int src) {
    std::vector<int> dist(t.node_count(), -1);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : t.adj[x])
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }
    return dist;
}

}  // namespace

int tree_diameter(const DualTree& t) {
    auto d0 = bfs_dist(t, 0);
    int a = (int)(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto da = bfs_dist(t, a);
    return *std::max_element(da.begin(), da.end());
}

DualTree root_at_diametrical_leaf(DualTree t) {
    int diam = tree_diameter(t);
    int root = -1;
    for (int v = 0; v < t.node_count() && root < 0; ++v) {
        if (t.node_count() > 1 && t.tree_degree(v) != 1) continue;
        auto d = bfs_dist(t, v);
        if (*std::max_element(d.begin(), d.end()) == diam) root = v;
    }
    t.root = root;
    t.parent.assign(t.node_count(), -1);
    t.children.assign(t.node_count(), {});
    std::queue<int> q;
    std::vector<char> seen(t.node_count(), 0);
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : t.adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                t.parent[y] = x;
                t.children[x].push_back(y);
                q.push(y);
            }
    }
    return t;
}

std::string to_string(RegionShape s) {
    switch (s) {
        case RegionShape::None: return "NONE";
        case RegionShape::H1: return "H1";
        case RegionShape::H2: return "H2";
        case RegionShape::H5: return "H5";
        case RegionShape::H6: return "H6";
        case RegionShape::H7: return "H7";
        case RegionShape::H8: return "H8";
        case RegionShape::H9: return "H9";
        case RegionShape::H10: return "H10";
        case RegionShape::H11: return "H11";
        case RegionShape::H12: return "H12";
        case RegionShape::H13: return "H13";
    }
    return "NONE";
}

LeafWalk walk_leaf_triangles(const Mop& m, const DualTree& t, int leaf,
                             int max_tris) {
    (void)m;
    if (t.tree_degree(leaf) != 1 && t.node_count() > 1)
        throw std::invalid_argument("walk must start at a leaf");
    LeafWalk w;
    w.F.push_back({-1, -1, -1});  // 1-based
    w.u.assign(12, -1);
    int prev = -1, cur = leaf;
    while ((int)w.nodes.size() < max_tris) {
        w.nodes.push_back(cur);
        w.F.push_back(t.tris[cur]);
        if (t.tree_degree(cur) == 3) {
            w.hit_branch = true;
            w.dist = (int)w.nodes.size() - 1;
            break;
        }
        int next = -1;
        for (int y : t.adj[cur])
            if (y != prev) next = y;
        if (next < 0) break;  // path end
        prev = cur;
        cur = next;
    }

    // Assign u labels along the chain.
    auto in_tri = [](const std::array<int, 3>& f, int v) {
        return f[0] == v || f[1] == v || f[2] == v;
    };
    int steps = (int)w.F.size() - 1;
    if (steps >= 2) {
        auto &F1 = w.F[1], &F2 = w.F[2];
        for (int v : F1)
            if (!in_tri(F2, v)) w.u[1] = v;
        for (int v : F2)
            if (!in_tri(F1, v)) w.u[4] = v;
        if (steps >= 3) {
            auto& F3 = w.F[3];
            for (int v : F1) {
                if (v == w.u[1]) continue;
                if (in_tri(F3, v)) w.u[2] = v;
                else w.u[3] = v;
            }
            for (int i = 3; i <= steps; ++i)
                for (int v : w.F[i])
                    if (!in_tri(w.F[i - 1], v)) w.u[i + 2] = v;
        }
    }

    // Region shape for branch distances 5 and 6.
    auto has = [&](int i, int label) { return in_tri(w.F[i], w.u[label]); };
    if (w.hit_branch && w.dist == 5 && steps >= 6) {
        if (has(6, 5)) w.shape = RegionShape::H1;
        else if (has(6, 4)) w.shape = RegionShape::H2;
    } else if (w.hit_branch && w.dist == 6 && steps >= 7) {
        if (has(6, 5) && has(7, 5)) w.shape = RegionShape::H5;
        else if (has(6, 5) && has(7, 7)) w.shape = RegionShape::H6;
        else if (has(6, 4) && has(7, 7)) w.shape = RegionShape::H7;
        else if (has(6, 4) && has(7, 4)) w.shape = RegionShape::H8;
    }
    return w;
}

LeafContext leaf_context(const Mop& m, const DualTree& t, int leaf) {
    bool has_deg3 = false;
    for (int v = 0; v < t.node_count(); ++v)
        if (t.tree_degree(v) == 3) has_deg3 = true;
    if (!has_deg3)
        throw std::invalid_argument("leaf_context: dual tree is a path (no degree-3 node)");
    auto w = walk_leaf_triangles(m, t, leaf, t.node_count());
    LeafContext ctx;
    ctx.leaf = leaf;
    ctx.dist = w.dist;
    ctx.path_nodes = w.nodes;
    ctx.region_shape = w.shape;
    if (w.hit_branch) ctx.nearest_deg3 = w.nodes.back();
    return ctx;
}

SubtreeMatch match_maximal_subtree(const DualTree& t) {
    if (!t.rooted())
        throw std::invalid_argument("match_maximal_subtree needs a rooted tree");
    int n = t.node_count();
    // chain_len[v] = node count of T_v when T_v is a plain chain, else -1
    std::vector<int> chain_len(n, -1), depth(n, 0), order;
    std::queue<int> q;
    q.push(t.root);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        order.push_back(x);
        for (int y : t.children[x]) {
            depth[y] = depth[x] + 1;
            q.push(y);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (t.children[v].empty()) chain_len[v] = 1;
        else if (t.children[v].size() == 1 && chain_len[t.children[v][0]] > 0)
            chain_len[v] = 1 + chain_len[t.children[v][0]];
    }
    SubtreeMatch best;
    int best_depth = -1;
    for (int v = 0; v < n; ++v) {
        if ((int)t.children[v].size() < 2) continue;
        bool all_chains = true;
        std::vector<int> legs;
        for (int c : t.children[v]) {
            if (chain_len[c] < 0) { all_chains = false; break; }
            legs.push_back(chain_len[c]);
        }
        if (!all_chains) continue;
        std::sort(legs.begin(), legs.end());
        if (depth[v] > best_depth) {
            best_depth = depth[v];
            best.subtree_root = v;
            best.leg_lengths = legs;
        }
    }
    if (best.subtree_root < 0)
        throw std::logic_error("no branch node with chain legs found");
    if (best.leg_lengths == std::vector<int>{1, 1}) best.pattern_id = "T1";
    else {
        best.pattern_id = "B";
        for (size_t i = 0; i < best.leg_lengths.size(); ++i)
            best.pattern_id +=
                (i ? "-" : "") + std::to_string(best.leg_lengths[i]);
    }
    return best;
}

std::string dump(const DualTree& t) {
    std::ostringstream os;
    for (int id = 0; id < t.node_count(); ++id) {
        auto [a, b, c] = t.tris[id];
        os << id << ": (" << a << "," << b << "," << c << ") -> [";
        const std::vector<int>& kids =
            t.rooted() ? t.children[id] : t.adj[id];
        for (size_t i = 0; i < kids.size(); ++i)
            os << (i ? "," : "") << kids[i];
        os << "]\n";
    }
    return os.str();
}

}  // namespace mopdom
