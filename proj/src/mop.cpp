#include "mopdom/mop.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace mopdom {

void normalize(Mop& m) {
    for (auto& [a, b] : m.diagonals)
        if (a > b) std::swap(a, b);
    std::sort(m.diagonals.begin(), m.diagonals.end());
    m.diagonals.erase(std::unique(m.diagonals.begin(), m.diagonals.end()),
                      m.diagonals.end());
}

namespace {

bool boundary_adjacent(int n, int a, int b) {
    // a < b assumed
    return b - a == 1 || (a == 0 && b == n - 1);
}

bool crosses(std::pair<int, int> d1, std::pair<int, int> d2) {
    auto [a, b] = d1;
    auto [c, d] = d2;
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

// Finds the unique apex c strictly between a and b such that both (a,c) and
// (c,b) are edges.  Returns -1 if none, -2 if more than one.
int find_apex(const std::vector<std::vector<char>>& adj, int a, int b) {
    int apex = -1;
    for (int c = a + 1; c < b; ++c) {
        if (adj[a][c] && adj[c][b]) {
            if (apex != -1) return -2;
            apex = c;
        }
    }
    return apex;
}

std::vector<std::vector<char>> adjacency_matrix(const Mop& m) {
    std::vector<std::vector<char>> adj(m.n, std::vector<char>(m.n, 0));
    for (int i = 0; i < m.n; ++i) {
        int j = (i + 1) % m.n;
        adj[i][j] = adj[j][i] = 1;
    }
    for (auto [a, b] : m.diagonals) adj[a][b] = adj[b][a] = 1;
    return adj;
}

bool collect_faces(const std::vector<std::vector<char>>& adj, int a, int b,
                   std::vector<std::array<int, 3>>& out) {
    int c = find_apex(adj, a, b);
    if (c < 0) return false;
    out.push_back({a, c, b});
    if (c - a >= 2 && !collect_faces(adj, a, c, out)) return false;
    if (b - c >= 2 && !collect_faces(adj, c, b, out)) return false;
    return true;
}

}  // namespace

ValidationReport validate(const Mop& m) {
    ValidationReport rep;
    if (m.n < 3) {
        rep.issues.push_back("n = " + std::to_string(m.n) + " < 3");
        return rep;
    }
    bool basic_ok = true;
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : m.diagonals) {
        std::string name = "{" + std::to_string(a) + "," + std::to_string(b) + "}";
        if (a < 0 || b >= m.n || a >= b) {
            rep.issues.push_back("diagonal " + name + " out of range or unordered");
            basic_ok = false;
            continue;
        }
        if (boundary_adjacent(m.n, a, b)) {
            rep.issues.push_back("diagonal " + name + " is a boundary edge");
            basic_ok = false;
        }
        if (!seen.insert({a, b}).second) {
            rep.issues.push_back("duplicate diagonal " + name);
            basic_ok = false;
        }
    }
    if ((int)m.diagonals.size() != m.n - 3)
        rep.issues.push_back("diagonal count " + std::to_string(m.diagonals.size()) +
                             " != n-3 = " + std::to_string(m.n - 3));
    for (size_t i = 0; i < m.diagonals.size(); ++i)
        for (size_t j = i + 1; j < m.diagonals.size(); ++j)
            if (crosses(m.diagonals[i], m.diagonals[j]))
                rep.issues.push_back(
                    "diagonals {" + std::to_string(m.diagonals[i].first) + "," +
                    std::to_string(m.diagonals[i].second) + "} and {" +
                    std::to_string(m.diagonals[j].first) + "," +
                    std::to_string(m.diagonals[j].second) + "} cross");
    if (!rep.ok() || !basic_ok) return rep;

    // Independent face check: the triangulation recursion must succeed.
    if (m.n >= 4) {
        auto adj = adjacency_matrix(m);
        std::vector<std::array<int, 3>> fs;
        if (!collect_faces(adj, 0, m.n - 1, fs) || (int)fs.size() != m.n - 2)
            rep.issues.push_back("face traversal failed: some inner face is not a triangle");
        int deg2 = 0;
        for (int v = 0; v < m.n; ++v) {
            int d = 2;
            for (auto [a, b] : m.diagonals)
                if (a == v || b == v) ++d;
            if (d == 2) ++deg2;
        }
        if (deg2 < 2)
            rep.issues.push_back("fewer than two degree-2 vertices");
    }
    return rep;
}

bool is_valid(const Mop& m) { return validate(m).ok(); }

std::vector<std::vector<int>> adjacency_lists(const Mop& m) {
    std::vector<std::vector<int>> adj(m.n);
    for (int i = 0; i < m.n; ++i) {
        int j = (i + 1) % m.n;
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (auto [a, b] : m.diagonals) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());
    return adj;
}

bool has_edge(const Mop& m, int u, int v) {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    if (boundary_adjacent(m.n, u, v)) return true;
    return std::find(m.diagonals.begin(), m.diagonals.end(),
                     std::make_pair(u, v)) != m.diagonals.end();
}

bool is_outer_edge(const Mop& m, int u, int v) {
    if (u > v) std::swap(u, v);
    return u >= 0 && v < m.n && boundary_adjacent(m.n, u, v);
}

int degree(const Mop& m, int v) {
    if (v < 0 || v >= m.n) throw std::invalid_argument("vertex index out of range");
    int d = 2;
    for (auto [a, b] : m.diagonals)
        if (a == v || b == v) ++d;
    return d;
}

int degree_two_count(const Mop& m) {
    int k = 0;
    for (int v = 0; v < m.n; ++v)
        if (degree(m, v) == 2) ++k;
    return k;
}

int distance(const Mop& m, int u, int v) {
    if (u < 0 || u >= m.n || v < 0 || v >= m.n)
        throw std::invalid_argument("vertex index out of range");
    if (u == v) return 0;
    auto adj = adjacency_lists(m);
    std::vector<int> dist(m.n, -1);
    dist[u] = 0;
    std::queue<int> q;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x]) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                if (y == v) return dist[y];
                q.push(y);
            }
        }
    }
    return -1;
}

std::vector<std::array<int, 3>> faces(const Mop& m) {
    if (m.n == 3) return {{0, 1, 2}};
    auto adj = adjacency_matrix(m);
    std::vector<std::array<int, 3>> fs;
    if (!collect_faces(adj, 0, m.n - 1, fs))
        throw std::invalid_argument("not a valid mop: face traversal failed");
    for (auto& t : fs) std::sort(t.begin(), t.end());
    std::sort(fs.begin(), fs.end());
    return fs;
}

bool is_internal_triangle(const Mop& m, const std::array<int, 3>& t) {
    auto fs = faces(m);
    std::array<int, 3> s = t;
    std::sort(s.begin(), s.end());
    if (std::find(fs.begin(), fs.end(), s) == fs.end())
        throw std::invalid_argument("triangle is not a face");
    auto is_diag = [&](int a, int b) { return !is_outer_edge(m, a, b); };
    return is_diag(s[0], s[1]) && is_diag(s[1], s[2]) && is_diag(s[0], s[2]);
}

int internal_triangle_count(const Mop& m) {
    int c = 0;
    for (auto& t : faces(m))
        if (is_internal_triangle(m, t)) ++c;
    return c;
}

MopMetrics compute_metrics(const Mop& m) {
    MopMetrics mm;
    mm.n = m.n;
    mm.k = degree_two_count(m);
    mm.internal_triangles = internal_triangle_count(m);
    mm.bound = disjunctive_bound(mm.n, mm.k);
    return mm;
}

Contraction contract_outer_edge(const Mop& m, std::pair<int, int> e) {
    if (m.n == 3) throw std::invalid_argument("cannot contract a triangle");
    auto [u, v] = e;
    if (u > v) std::swap(u, v);
    if (!is_outer_edge(m, u, v))
        throw std::invalid_argument("edge is not an outer edge");
    // The higher vertex in cyclic sense is removed; for {0, n-1} that is n-1.
    int removed = (u == 0 && v == m.n - 1) ? m.n - 1 : v;
    int kept = (removed == v) ? u : v;

    auto map_old = [&](int x) {
        if (x == removed) x = kept;
        return x - (x > removed ? 1 : 0);
    };
    Contraction res;
    res.result.n = m.n - 1;
    res.merged_old = {std::min(kept, removed), std::max(kept, removed)};
    res.merged_new = map_old(kept);
    std::set<std::pair<int, int>> diags;
    for (auto [a, b] : m.diagonals) {
        int x = map_old(a), y = map_old(b);
        if (x == y) continue;
        if (x > y) std::swap(x, y);
        if (boundary_adjacent(res.result.n, x, y)) continue;
        diags.insert({x, y});
    }
    res.result.diagonals.assign(diags.begin(), diags.end());
    res.to_old.resize(res.result.n);
    for (int x = 0; x < m.n; ++x)
        if (x != removed) res.to_old[map_old(x)] = x;
    return res;
}

std::optional<Deletion> try_delete_vertices(const Mop& m,
                                            const std::vector<int>& deleted) {
    std::vector<char> gone(m.n, 0);
    for (int v : deleted) {
        if (v < 0 || v >= m.n) return std::nullopt;
        gone[v] = 1;
    }
    Deletion del;
    del.from_old.assign(m.n, -1);
    for (int v = 0; v < m.n; ++v) {
        if (!gone[v]) {
            del.from_old[v] = (int)del.to_old.size();
            del.to_old.push_back(v);
        }
    }
    int nn = (int)del.to_old.size();
    if (nn < 3) return std::nullopt;
    del.result.n = nn;
    // Consecutive survivors must already be joined by an edge of m, else the
    // remainder's boundary cycle is broken.
    for (int i = 0; i < nn; ++i) {
        int a = del.to_old[i], b = del.to_old[(i + 1) % nn];
        if (!has_edge(m, a, b)) return std::nullopt;
    }
    for (int i = 0; i < nn; ++i)
        for (int j = i + 2; j < nn; ++j) {
            if (i == 0 && j == nn - 1) continue;
            if (has_edge(m, del.to_old[i], del.to_old[j]))
                del.result.diagonals.push_back({i, j});
        }
    if (!is_valid(del.result)) return std::nullopt;
    return del;
}

Deletion delete_ear_region(const Mop& m, const std::vector<int>& deleted) {
    auto d = try_delete_vertices(m, deleted);
    if (!d) throw std::invalid_argument("deletion does not leave a valid mop");
    return *d;
}

std::pair<std::pair<int, int>, int> find_partition_diagonal(const Mop& m) {
    if (m.n < 6) throw std::invalid_argument("find_partition_diagonal needs n >= 6");
    for (auto [a, b] : m.diagonals) {
        int side = b - a;
        if (side >= 4 && side <= 6) return {{a, b}, side};
    }
    for (auto [a, b] : m.diagonals) {
        int side = m.n - (b - a);
        if (side >= 4 && side <= 6) return {{a, b}, side};
    }
    throw std::logic_error("no partition diagonal found on a valid mop");
}

}  // namespace mopdom
