#include <doctest.h>

#include <sstream>

#include "mopdom/generate.hpp"
#include "mopdom/io.hpp"

using namespace mopdom;

TEST_CASE("round trip is bit exact") {
    for (int n : {3, 5, 9}) {
        for (const auto& m : all_triangulations(n)) {
            auto text = to_mop_text(m);
            std::istringstream in(text);
            auto res = parse_mops(in);
            REQUIRE(res.ok());
            REQUIRE(res.mops.size() == 1);
            CHECK(res.mops[0] == m);
            CHECK(to_mop_text(res.mops[0]) == text);
        }
    }
}

TEST_CASE("comments and blank lines") {
    std::istringstream in(
        "# a fan on five vertices\n"
        "5\n"
        "0 2\n"
        "# inline comment line\n"
        "0 3\n"
        "\n"
        "4\n"
        "0 2\n");
    auto res = parse_mops(in);
    REQUIRE(res.ok());
    REQUIRE(res.mops.size() == 2);
    CHECK(res.mops[0] == family("fan", 5));
    CHECK(res.mops[1].n == 4);
}

TEST_CASE("multiple records separated by blank lines") {
    std::ostringstream out;
    write_mop(out, family("fan", 6));
    write_mop(out, family("serpentine", 7));
    std::istringstream in(out.str());
    auto res = parse_mops(in);
    REQUIRE(res.ok());
    REQUIRE(res.mops.size() == 2);
    CHECK(res.mops[0] == family("fan", 6));
    CHECK(res.mops[1] == family("serpentine", 7));
}

TEST_CASE("malformed input reports line numbers") {
    std::istringstream in(
        "5\n"
        "0 2\n"
        "broken\n"
        "0 3\n");
    auto res = parse_mops(in);
    CHECK(!res.ok());
    REQUIRE(!res.errors.empty());
    CHECK(res.errors[0].line == 3);
}

TEST_CASE("extra tokens on a diagonal line are an error") {
    std::istringstream in("4\n0 2 9\n");
    auto res = parse_mops(in);
    CHECK(!res.ok());
}
