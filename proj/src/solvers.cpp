#include "mopdom/solvers.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace mopdom {

CoverageChecker::CoverageChecker(const Mop& m)
    : n_(m.n), adj_(adjacency_lists(m)), ring2_(m.n) {
    for (int v = 0; v < n_; ++v) {
        std::set<int> ball;
        for (int u : adj_[v])
            for (int w : adj_[u]) ball.insert(w);
        ball.erase(v);
        for (int u : adj_[v]) ball.erase(u);
        ring2_[v].assign(ball.begin(), ball.end());
    }
}

bool CoverageChecker::is_2dd(const std::vector<int>& s) const {
    std::vector<char> in(n_, 0);
    for (int v : s) {
        if (v < 0 || v >= n_) return false;
        in[v] = 1;
    }
    for (int v = 0; v < n_; ++v) {
        if (in[v]) continue;
        bool adj_cover = false;
        for (int u : adj_[v])
            if (in[u]) { adj_cover = true; break; }
        if (adj_cover) continue;
        int at2 = 0;
        for (int u : ring2_[v])
            if (in[u] && ++at2 >= 2) break;
        if (at2 < 2) return false;
    }
    return true;
}

bool CoverageChecker::is_dominating(const std::vector<int>& s) const {
    std::vector<char> in(n_, 0);
    for (int v : s) {
        if (v < 0 || v >= n_) return false;
        in[v] = 1;
    }
    for (int v = 0; v < n_; ++v) {
        if (in[v]) continue;
        bool covered = false;
        for (int u : adj_[v])
            if (in[u]) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

bool is_2dd_set(const Mop& m, const std::vector<int>& s) {
    return CoverageChecker(m).is_2dd(s);
}

bool is_dominating_set(const Mop& m, const std::vector<int>& s) {
    return CoverageChecker(m).is_dominating(s);
}

namespace {

// Lexicographic combination search shared by both exact solvers; n <= 64.
template <typename Feasible>
ExactResult exact_search(const Mop& m, int cap, Feasible feasible) {
    if (m.n > 64)
        throw std::invalid_argument("exact search limited to n <= 64");
    if (cap <= 0)
        throw std::invalid_argument("cap must be positive");
    ExactResult res;
    std::vector<int> pick;
    for (int r = 1; r <= std::min(cap, m.n); ++r) {
        pick.assign(r, 0);
        // enumerate r-combinations of 0..n-1 in lexicographic order
        std::vector<int> c(r);
        for (int i = 0; i < r; ++i) c[i] = i;
        while (true) {
            if (feasible(c)) {
                res.value = r;
                res.witness.vertices = c;
                res.witness.verified = true;
                return res;
            }
            int i = r - 1;
            while (i >= 0 && c[i] == m.n - r + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
        }
    }
    res.exceeded_cap = true;
    return res;
}

}  // namespace

ExactResult exact_gamma2d(const Mop& m, int cap) {
    CoverageChecker cc(m);
    // Bitmask coverage: cover1[v] = vertices adjacency-covered by v, ring2 as masks.
    int n = m.n;
    std::vector<uint64_t> nbr(n, 0), r2(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int u : cc.neighbors()[v]) nbr[v] |= 1ull << u;
        for (int u : cc.ring2()[v]) r2[v] |= 1ull << u;
    }
    uint64_t all = (n == 64) ? ~0ull : (1ull << n) - 1;
    auto feasible = [&](const std::vector<int>& c) {
        uint64_t in = 0, adjcov = 0, once = 0, twice = 0;
        for (int v : c) {
            in |= 1ull << v;
            adjcov |= nbr[v];
            twice |= once & r2[v];
            once |= r2[v];
        }
        return (in | adjcov | twice) == all;
    };
    return exact_search(m, cap, feasible);
}

int exact_gamma(const Mop& m) {
    CoverageChecker cc(m);
    int n = m.n;
    std::vector<uint64_t> closed(n, 0);
    for (int v = 0; v < n; ++v) {
        closed[v] = 1ull << v;
        for (int u : cc.neighbors()[v]) closed[v] |= 1ull << u;
    }
    uint64_t all = (n == 64) ? ~0ull : (1ull << n) - 1;
    auto feasible = [&](const std::vector<int>& c) {
        uint64_t cov = 0;
        for (int v : c) cov |= closed[v];
        return cov == all;
    };
    return exact_search(m, m.n, feasible).value;
}

DisjunctiveSet greedy_2dd(const Mop& m) {
    CoverageChecker cc(m);
    int n = m.n;
    std::vector<char> in(n, 0), adjcov(n, 0);
    std::vector<int> at2(n, 0);
    auto covered = [&](int v) {
        return in[v] || adjcov[v] || at2[v] >= 2;
    };
    DisjunctiveSet out;
    int uncovered = n;
    while (uncovered > 0) {
        int best = -1, best_gain = -1;
        for (int v = 0; v < n; ++v) {
            if (in[v]) continue;
            int gain = covered(v) ? 0 : 1;
            for (int u : cc.neighbors()[v])
                if (!covered(u) && !adjcov[u]) ++gain;
            for (int u : cc.ring2()[v])
                if (!covered(u) && at2[u] == 1) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        in[best] = 1;
        for (int u : cc.neighbors()[best]) adjcov[u] = 1;
        for (int u : cc.ring2()[best]) ++at2[u];
        uncovered = 0;
        for (int v = 0; v < n; ++v)
            if (!covered(v)) ++uncovered;
        out.vertices.push_back(best);
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    out.verified = cc.is_2dd(out.vertices);
    return out;
}

}  // namespace mopdom
