#include <doctest.h>

#include "mopdom/generate.hpp"
#include "mopdom/solvers.hpp"

using namespace mopdom;

TEST_CASE("is_2dd_set basics") {
    auto fan = family("fan", 7);
    std::vector<int> all{0, 1, 2, 3, 4, 5, 6};
    CHECK(is_2dd_set(fan, all));
    CHECK(is_2dd_set(fan, {0}));
    CHECK(!is_2dd_set(fan, {1}));
}

TEST_CASE("obs3 pairs: {i, i+4} works for 5 <= n <= 8, every i") {
    for (int n = 5; n <= 8; ++n)
        for (const auto& m : all_triangulations(n)) {
            CoverageChecker cc(m);
            for (int i = 0; i < n; ++i) {
                std::vector<int> s{i, (i + 4) % n};
                std::sort(s.begin(), s.end());
                CHECK(cc.is_2dd(s));
            }
        }
}

TEST_CASE("one distance-2 witness is not enough") {
    // In the 6-fan, vertex 5 sees {2} only at distance 2 and has no
    // neighbor in the set, so a single witness must not count as covered.
    auto fan = family("fan", 6);
    CHECK(!is_2dd_set(fan, {2}));
    CHECK(is_2dd_set(fan, {2, 4}));
}

TEST_CASE("is_dominating_set and the domination chain") {
    auto fan = family("fan", 7);
    CHECK(is_dominating_set(fan, {0}));
    CHECK(!is_dominating_set(fan, {1}));
    for (int n = 4; n <= 9; ++n)
        for (const auto& m : all_triangulations(n)) {
            // every dominating set is a disjunctive dominating set
            auto g = exact_gamma(m);
            auto g2 = exact_gamma2d(m);
            CHECK(g2.value <= g);
        }
}

TEST_CASE("exact_gamma2d small values") {
    CHECK(exact_gamma2d(family("fan", 7)).value == 1);
    CHECK(exact_gamma2d(family("fan", 7)).witness.vertices == std::vector<int>{0});
    Mop tri{3, {}};
    CHECK(exact_gamma2d(tri).value == 1);
    CHECK_THROWS(exact_gamma2d(tri, 0));
}

TEST_CASE("witness is minimal and verified") {
    for (const auto& m : all_triangulations(8)) {
        auto res = exact_gamma2d(m);
        CHECK(res.witness.verified == true);
        CHECK(is_2dd_set(m, res.witness.vertices));
        CHECK(res.witness.size() == res.value);
    }
}

TEST_CASE("exact_gamma honours the classical bounds") {
    for (int n = 4; n <= 10; ++n)
        for (const auto& m : all_triangulations(n)) {
            int g = exact_gamma(m);
            int k = degree_two_count(m);
            CHECK(g <= (n + k) / 4);
            CHECK(g <= n / 3);
        }
}

TEST_CASE("greedy_2dd always verifies and never beats exact") {
    auto g = greedy_2dd(family("fan", 7));
    CHECK(g.vertices == std::vector<int>{0});
    CHECK(g.verified == true);
    for (const auto& m : all_triangulations(9)) {
        auto gr = greedy_2dd(m);
        CHECK(gr.verified == true);
        CHECK(is_2dd_set(m, gr.vertices));
        CHECK(gr.size() >= exact_gamma2d(m).value);
    }
}

TEST_CASE("monotonicity: supersets of a 2DD-set stay 2DD") {
    for (const auto& m : all_triangulations(7)) {
        auto res = exact_gamma2d(m);
        for (int v = 0; v < m.n; ++v) {
            auto s = res.witness.vertices;
            s.push_back(v);
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            CHECK(is_2dd_set(m, s));
        }
    }
}
