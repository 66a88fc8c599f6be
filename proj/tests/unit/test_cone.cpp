#include "doctest.h"
#include "symcone/classifier.hpp"
#include "symcone/io.hpp"
#include "symcone/linalg.hpp"
#include "symcone/orbits.hpp"
#include "symcone/ray_enum.hpp"
#include "symcone/shannon_cone.hpp"

using namespace symcone;

TEST_CASE("elemental inequality count")
{
    // n + C(n,2) 2^(n-2)
    CHECK(elemental_inequalities(3).size() == 3 + 3 * 2);
    CHECK(elemental_inequalities(4).size() == 4 + 6 * 4);
    CHECK(elemental_inequalities(6).size() == 6 + 15 * 16);
}

TEST_CASE("symmetrized rows are primitive and deduplicated")
{
    const auto h = build_hrep(orbit_structure(group_from_string("(123)(456),(14623)", 6)));
    CHECK(h.dimension() == 7);
    for (std::size_t i = 0; i < h.rows.size(); ++i) {
        CHECK(primitive(h.rows[i]) == h.rows[i]);
        for (std::size_t j = i + 1; j < h.rows.size(); ++j)
            CHECK(h.rows[i] != h.rows[j]);
    }
}

TEST_CASE("S_n cone: rays are the uniform matroids")
{
    for (int n = 2; n <= 6; ++n) {
        const auto h = build_hrep(young_structure({n}));
        const auto v = double_description(h);
        CHECK(v.size() == static_cast<std::size_t>(n));
        for (const auto& r : v.rays)
            CHECK(verify_extremality(h, r));
    }
}

TEST_CASE("double description agrees with brute force on small cones")
{
    for (const char* g : {"(12)(34)", "(123)", "(1234)", "(12),(34)", "(12)(34),(13)(24)"}) {
        const auto h = build_hrep(orbit_structure(group_from_string(g, 4)));
        CHECK(double_description(h).rays == cross_check_brute(h).rays);
    }
}

TEST_CASE("PSL2(5) cone matches the known rays")
{
    const auto h = build_hrep(orbit_structure(group_from_string("(123)(456),(14623)", 6)));
    const auto v = double_description(h);
    CHECK(v.size() == 8);
    bool found = false;
    for (const auto& r : v.rays)
        found = found || to_string(r) == "2 4 6 5 6 6 6";
    CHECK(found);
    const auto c = verify_completeness(h, v.rays);
    CHECK(c.complete);
}
