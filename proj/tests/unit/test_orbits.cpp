#include "doctest.h"
#include "symcone/classifier.hpp"
#include "symcone/orbits.hpp"

using namespace symcone;

TEST_CASE("orbits partition the nonempty subsets")
{
    const auto s = orbit_structure(group_from_string("(123)(456),(14623)", 6));
    CHECK(s.dimension() == 7);
    std::size_t total = 0;
    for (const auto& o : s.orbits)
        total += o.size();
    CHECK(total == 63);
    // canonical order: by cardinality, then lex-least member
    for (int k = 1; k < s.dimension(); ++k)
        CHECK(mask_canonical_less(s.label(k - 1), s.label(k)));
    CHECK(s.orbits[s.index_of(full_mask(6))].size() == 1);
}

TEST_CASE("symmetric and trivial groups")
{
    const auto sym = young_structure({4});
    CHECK(sym.dimension() == 4);
    CHECK(young_structure({5}).dimension() == 5);
    const auto triv = orbit_structure(4, {});
    CHECK(triv.dimension() == 15);
    CHECK(refines(triv, sym));
    CHECK_FALSE(refines(sym, triv));
}

TEST_CASE("relabeling preserves the canonical form")
{
    const auto s = orbit_structure(group_from_string("(12)(34),(135)", 5));
    const auto r = relabel(s, parse_perm("(15)(24)", 5));
    CHECK(canonical_form(s).code == canonical_form(r).code);
    CHECK(structures_isomorphic(s, r).has_value());
}

TEST_CASE("different subgroups can share a structure")
{
    // PGL2(5) is 3-transitive on 6 points, so its subset orbits are those of S6
    const auto a = orbit_structure(group_from_string("(123456),(12)", 6));
    const auto b = orbit_structure(group_from_string("(123456),(16)(23)", 6));
    CHECK(a == b);
}

TEST_CASE("poset sizes for degrees 6 and 7")
{
    CHECK(named_poset(6, ClassifyMode::Catalog).size() == 35);
    CHECK(named_poset(7, ClassifyMode::Catalog).size() == 51);
}

TEST_CASE("poset order is a partial order with a transitive reduction")
{
    const auto p = named_poset(5, ClassifyMode::Catalog);
    const int m = static_cast<int>(p.size());
    for (int i = 0; i < m; ++i) {
        CHECK(p.leq[i][i]);
        for (int j = 0; j < m; ++j) {
            if (i != j && p.leq[i][j])
                CHECK_FALSE(p.leq[j][i]);
            for (int k = 0; k < m; ++k)
                if (p.leq[i][j] && p.leq[j][k])
                    CHECK(p.leq[i][k]);
        }
    }
    for (const auto& [a, b] : p.hasse_edges) {
        CHECK(p.less(a, b));
        for (int c = 0; c < m; ++c)
            CHECK_FALSE((p.less(a, c) && p.less(c, b)));
    }
}
