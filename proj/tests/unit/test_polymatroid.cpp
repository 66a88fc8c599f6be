#include <random>

#include "doctest.h"
#include "symcone/polymatroid.hpp"
#include "symcone/verification.hpp"

using namespace symcone;

TEST_CASE("uniform matroids")
{
    const auto u = uniform(2, 4);
    CHECK(is_matroid(u));
    CHECK(u(point_bit(1)) == 1);
    CHECK(u(full_mask(4)) == 2);
    CHECK(uniform_rank(u) == 2);
    CHECK_FALSE(uniform_rank(sum(u, uniform(1, 4))).has_value());
}

TEST_CASE("axiom violations are reported")
{
    auto h = uniform(2, 3);
    h[mask_from_points({1, 2})] = 3;  // exceeds h(1) + h(2)
    const auto r = check_polymatroid(h);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.violation.empty());
    CHECK_FALSE(is_matroid(scale(uniform(2, 3), 2)));
    CHECK(is_polymatroid(scale(uniform(2, 3), 2)));
}

TEST_CASE("minors keep track of the original labels")
{
    const auto h = uniform(3, 5);
    const auto m = minor(h, point_bit(5), mask_from_points({1, 2, 3, 4}));
    CHECK(m.n == 4);
    CHECK(m(full_mask(4)) == 2);
    CHECK(m.origin == std::vector<int>{1, 2, 3, 4});
    const auto r = restrict(h, mask_from_points({2, 4}));
    CHECK(r.origin == std::vector<int>{2, 4});
    CHECK_THROWS(contract(r, point_bit(5)));
}

TEST_CASE("loops contribute nothing")
{
    const auto h = add_loops(uniform(2, 3), mask_from_points({2, 5}), 5);
    CHECK(h.n == 5);
    CHECK(h(point_bit(2)) == 0);
    CHECK(h(full_mask(5)) == 2);
    CHECK(is_matroid(h));
}

TEST_CASE("random polymatroids are polymatroids")
{
    std::mt19937 rng(7);
    for (int i = 0; i < 25; ++i)
        CHECK(is_polymatroid(random_polymatroid(3 + i % 4, rng)));
}

TEST_CASE("case tables")
{
    const auto h = from_cases(6, {card_equals(1, 2), card_equals(2, 4), otherwise(6)});
    CHECK(h(point_bit(3)) == 2);
    CHECK(h(mask_from_points({1, 2, 3})) == 6);
}
