#include "doctest.h"
#include "symcone/perm.hpp"

using namespace symcone;

TEST_CASE("composition applies the right factor first")
{
    const auto p = parse_perm("(12)", 3);
    const auto q = parse_perm("(23)", 3);
    // (p*q)(2) = p(q(2)) = p(3) = 3
    CHECK(compose(p, q).images()[1] == 3);
    CHECK(compose(p, q).to_cycle_string() == "(123)");
    CHECK(compose(p, p).is_identity());
}

TEST_CASE("parse and print round trip")
{
    for (const char* s : {"()", "(12)", "(123)(45)", "(1634)(25)"}) {
        const auto p = parse_perm(s, 6);
        CHECK(parse_perm(p.to_cycle_string(), 6) == p);
    }
    CHECK_THROWS(parse_perm("(12x)", 3));
    CHECK_THROWS(parse_perm("(14)", 3));
    CHECK_THROWS(parse_perm("(121)", 3));
}

TEST_CASE("group orders")
{
    CHECK(group_from_string("(12),(123456)", 6).order() == 720);
    CHECK(group_from_string("(123)(456),(14623)", 6).order() == 60);  // PSL2(5)
    CHECK(group_from_string("(1234567),(235)(476)", 7).order() == 21);
    CHECK(group_from_string("(1234567),(163247)", 7).order() == 42);  // AGL1(7)
}

TEST_CASE("conjugacy")
{
    const auto a = group_from_string("(12)(34)", 4);
    const auto b = group_from_string("(13)(24)", 4);
    const auto c = group_from_string("(12)", 4);
    CHECK(are_conjugate(a, b).has_value());
    CHECK_FALSE(are_conjugate(a, c).has_value());
}

TEST_CASE("subgroup class counts of small symmetric groups")
{
    const int expected[] = {1, 2, 4, 11, 19};
    for (int n = 1; n <= 5; ++n)
        CHECK(enumerate_subgroup_classes(n).representatives.size() == static_cast<std::size_t>(expected[n - 1]));
}
