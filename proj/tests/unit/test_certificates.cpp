#include <random>

#include "doctest.h"
#include "symcone/certificates.hpp"
#include "symcone/io.hpp"
#include "symcone/orbits.hpp"
#include "symcone/verification.hpp"

using namespace symcone;

namespace {

const std::vector<Mask> fano_lines = {
    mask_from_points({1, 2, 4}), mask_from_points({2, 3, 5}), mask_from_points({3, 4, 6}), mask_from_points({4, 5, 7}),
    mask_from_points({1, 5, 6}), mask_from_points({2, 6, 7}), mask_from_points({1, 3, 7})};

}

TEST_CASE("GF(p) rank of random matrices matches their rank function")
{
    std::mt19937 rng(3);
    for (int p : {2, 3, 5}) {
        const auto m = random_matrix(4, 3, 1, p, rng);
        const auto h = rank_function(m);
        CHECK(is_matroid(h));
        CHECK(verify_multilinear_rep(m, h).ok);
    }
}

TEST_CASE("Fano plane")
{
    CHECK(is_fano_line_set(fano_lines));
    const auto h = fano_rank(fano_lines);
    CHECK(is_matroid(h));
    const auto f = fano_representation(fano_lines);
    REQUIRE(f.has_value());
    CHECK(verify_multilinear_rep(*f, h).ok);
    // dual: rank 4, and not every line is dependent any more
    const auto d = dual_representation(*f);
    const auto hd = rank_function(d);
    CHECK(hd(full_mask(7)) == 4);
    CHECK(is_matroid(hd));

    auto triples = fano_lines;
    triples.push_back(mask_from_points({1, 2, 3}));
    const auto planes = fano_planes_within(triples);
    REQUIRE(planes.size() == 1);
    CHECK(planes[0].size() == 7);
}

TEST_CASE("direct sum adds ranks")
{
    const auto f = *fano_representation(fano_lines);
    const auto s = direct_sum(f, dual_representation(f));
    CHECK(s.degree() == 7);
    CHECK(rank_function(s)(full_mask(7)) == 7);
}

TEST_CASE("Zhang-Yeung certificate for the S3wr2C2 ray")
{
    const auto catalog = load_group_catalog(data_dir() / "groups.json");
    const auto s = orbit_structure(*find_group(catalog, "S3wr2C2")->group);
    const auto fixtures = read_json(data_dir() / "fixtures" / "rank_functions.json");
    for (const auto& f : fixtures) {
        if (f["name"] != "h2_s3wr2c2")
            continue;
        const auto h = rank_function_from_cases(6, f["cases"], &s);
        CHECK(is_polymatroid(h));
        const auto z = zy_minor(h, point_bit(6), mask_from_points({1, 2, 3, 4}));
        CHECK(z.value < 0);
        CHECK(zy_violation_search(h).has_value());
    }
    CHECK_FALSE(zy_violation_search(uniform(2, 4)).has_value());
}

TEST_CASE("match_representation finds relabeling and scale")
{
    const auto m = *fano_representation(fano_lines);
    const auto h = scale(fano_rank(fano_lines), 3);
    const auto found = match_representation(m, h);
    REQUIRE(found.has_value());
    CHECK(found->second == 3);
}

TEST_CASE("cyclic search represents the Fano matroid")
{
    const auto h = fano_rank(fano_lines);  // lines are the translates of 124 mod 7
    const auto m = search_cyclic_representation(h);
    REQUIRE(m.has_value());
    CHECK(verify_multilinear_rep(*m, h).ok);
}

TEST_CASE("shipped matrices load")
{
    const auto ms = load_matrices(data_dir() / "certificates");
    CHECK(ms.size() == 5);
    for (const auto& m : ms)
        CHECK_NOTHROW(m.validate());
    CHECK_THROWS(load_matrices("/nonexistent/dir"));
}
