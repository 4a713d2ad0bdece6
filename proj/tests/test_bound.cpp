#include <doctest.h>

#include "mopdom/bound.hpp"
#include "mopdom/generate.hpp"

using namespace mopdom;

TEST_CASE("catalogue budgets are sound") {
    CHECK(catalogue_budget_sound());
    CHECK(reduction_catalogue().size() >= 20);
}

TEST_CASE("construct_small is verified and within the bound, exhaustively") {
    for (int n = 7; n <= 12; ++n) {
        int b = disjunctive_bound(n, 2);  // k >= 2 always; recompute per mop below
        (void)b;
        for (const auto& m : all_triangulations(n)) {
            auto s = construct_small(m);
            CHECK(s.verified);
            CHECK(is_2dd_set(m, s.vertices));
            CHECK((int)s.vertices.size() <= disjunctive_bound(n, degree_two_count(m)));
        }
    }
}

TEST_CASE("find_applicable_reduction needs n >= 13") {
    CHECK_THROWS(find_applicable_reduction(family("fan", 12)));
}

TEST_CASE("a reduction applies to the 13-fan") {
    auto step = find_applicable_reduction(family("fan", 13));
    REQUIRE(step.has_value());
    CHECK(!step->rule_id.empty());
    CHECK(!step->deleted.empty());
}

TEST_CASE("construct_bounded_2dd on the named families") {
    for (int n = 7; n <= 40; ++n) {
        for (const char* fam : {"fan", "serpentine"}) {
            auto m = family(fam, n);
            auto t = construct_bounded_2dd(m);
            CHECK(t.final_set.verified);
            CHECK(is_2dd_set(m, t.final_set.vertices));
            CHECK((int)t.final_set.vertices.size() <= t.bound_value);
            CHECK(t.bound_value == disjunctive_bound(n, degree_two_count(m)));
        }
    }
}

TEST_CASE("construct_bounded_2dd on random instances") {
    for (int n : {13, 17, 25, 40}) {
        for (uint64_t seed = 1; seed <= 5; ++seed) {
            auto m = random_mop(n, seed);
            auto t = construct_bounded_2dd(m);
            CHECK(t.final_set.verified);
            CHECK(is_2dd_set(m, t.final_set.vertices));
            CHECK((int)t.final_set.vertices.size() <= t.bound_value);
        }
    }
}

TEST_CASE("traces are deterministic and serializable") {
    auto m = random_mop(20, 7);
    auto a = construct_bounded_2dd(m);
    auto b = construct_bounded_2dd(m);
    CHECK(trace_to_jsonl(a) == trace_to_jsonl(b));
    CHECK(a.final_set.vertices == b.final_set.vertices);
    if (!a.steps.empty())
        CHECK(trace_to_jsonl(a).find("rule_id") != std::string::npos);
}

TEST_CASE("steps record the order drop") {
    auto m = family("serpentine", 30);
    auto t = construct_bounded_2dd(m);
    for (const auto& st : t.steps) {
        CHECK(st.n_after < st.n_before);
        CHECK(st.n_before - st.n_after <=
              (int)st.deleted.size() + (st.contracted ? 1 : 0));
    }
}
