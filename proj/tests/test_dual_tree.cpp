#include <doctest.h>

#include "mopdom/dual_tree.hpp"
#include "mopdom/generate.hpp"
#include "mopdom/leaf_walk.hpp"

using namespace mopdom;

namespace {

Mop mk(int n, std::vector<std::pair<int, int>> d) {
    Mop m{n, std::move(d)};
    normalize(m);
    return m;
}

int deg3_count(const DualTree& t) {
    int c = 0;
    for (int v = 0; v < t.node_count(); ++v)
        if (t.tree_degree(v) == 3) ++c;
    return c;
}

}  // namespace

TEST_CASE("build_dual shapes") {
    auto path = build_dual(mk(5, {{0, 2}, {0, 3}}));
    CHECK(path.node_count() == 3);
    int leaves = 0;
    for (int v = 0; v < 3; ++v)
        if (path.tree_degree(v) == 1) ++leaves;
    CHECK(leaves == 2);

    auto star = build_dual(mk(6, {{0, 2}, {2, 4}, {0, 4}}));
    CHECK(star.node_count() == 4);
    CHECK(deg3_count(star) == 1);

    for (int n = 4; n <= 9; ++n)
        for (const auto& m : all_triangulations(n)) {
            auto t = build_dual(m);
            CHECK(t.node_count() == n - 2);
            int edges = 0;
            for (const auto& a : t.adj) edges += (int)a.size();
            CHECK(edges == 2 * (n - 3));
            CHECK(deg3_count(t) == internal_triangle_count(m));
        }
}

TEST_CASE("root_at_diametrical_leaf") {
    auto t = root_at_diametrical_leaf(build_dual(mk(5, {{0, 2}, {0, 3}})));
    CHECK(t.rooted());
    CHECK(t.tree_degree(t.root) == 1);
    auto star = root_at_diametrical_leaf(build_dual(mk(6, {{0, 2}, {2, 4}, {0, 4}})));
    CHECK(star.tree_degree(star.root) == 1);
    CHECK(tree_diameter(star) == 2);
}

TEST_CASE("dump format") {
    auto t = build_dual(mk(5, {{0, 2}, {0, 3}}));
    auto s = dump(t);
    CHECK(s == "0: (0,1,2) -> [1]\n1: (0,2,3) -> [0,2]\n2: (0,3,4) -> [1]\n");
}

TEST_CASE("leaf_context basics") {
    auto star = build_dual(mk(6, {{0, 2}, {2, 4}, {0, 4}}));
    int leaf = -1;
    for (int v = 0; v < star.node_count(); ++v)
        if (star.tree_degree(v) == 1) { leaf = v; break; }
    auto ctx = leaf_context(mk(6, {{0, 2}, {2, 4}, {0, 4}}), star, leaf);
    CHECK(ctx.dist == 1);
    CHECK(ctx.region_shape == RegionShape::None);

    auto fan = family("fan", 7);
    auto ft = build_dual(fan);
    CHECK_THROWS(leaf_context(fan, ft, 0));
}

TEST_CASE("leaf walk shape dispatch at branch distance 5 and 6") {
    // Branch distances 5 and 6 first fit inside a dual tree at n = 11 and
    // n = 12.  Shapes H1/H2 may only fire at distance 5, H5..H8 only at
    // distance 6, and whenever a standard walk (u2 outside F4, u6 outside
    // F6) reaches distance 5 the leaf must classify.
    long seen5 = 0, seen6 = 0;
    auto in_tri = [](const std::array<int, 3>& f, int v) {
        return f[0] == v || f[1] == v || f[2] == v;
    };
    for (int n : {11, 12}) {
        for (const auto& m : all_triangulations(n)) {
            auto t = build_dual(m);
            for (int v = 0; v < t.node_count(); ++v) {
                if (t.tree_degree(v) != 1) continue;
                auto w = walk_leaf_triangles(m, t, v, 9);
                if (w.shape == RegionShape::H1 || w.shape == RegionShape::H2)
                    CHECK(w.dist == 5);
                if (w.shape == RegionShape::H5 || w.shape == RegionShape::H6 ||
                    w.shape == RegionShape::H7 || w.shape == RegionShape::H8)
                    CHECK(w.dist == 6);
                if (w.dist == 5) {
                    bool standard = !in_tri(w.F[4], w.u[2]) &&
                                    (in_tri(w.F[6], w.u[4]) || in_tri(w.F[6], w.u[5]));
                    if (standard) {
                        ++seen5;
                        CHECK((w.shape == RegionShape::H1 || w.shape == RegionShape::H2));
                    }
                }
                if (w.dist == 6 && w.shape != RegionShape::None) ++seen6;
            }
        }
    }
    CHECK(seen5 > 0);
    CHECK(seen6 > 0);
}

TEST_CASE("match_maximal_subtree finds the cherry") {
    auto rt = root_at_diametrical_leaf(build_dual(mk(6, {{0, 2}, {2, 4}, {0, 4}})));
    auto sm = match_maximal_subtree(rt);
    CHECK(sm.pattern_id == "T1");
    CHECK(sm.leg_lengths == std::vector<int>{1, 1});
    auto fan_rt = root_at_diametrical_leaf(build_dual(family("fan", 7)));
    CHECK_THROWS(match_maximal_subtree(fan_rt));
}
