#include <set>

#include "doctest.h"
#include "symcone/classifier.hpp"

using namespace symcone;

namespace {

Justification given() { return {"test", "", -1}; }

const ClassificationReport& degree6()
{
    static const ClassificationReport r = classify_degree(6);
    return r;
}

}  // namespace

TEST_CASE("propagate leaves an empty seed alone")
{
    const auto p = named_poset(5, ClassifyMode::Catalog);
    Statuses st(p.size());
    propagate(p, st);
    for (const auto& s : st)
        CHECK(s.value == Tightness::Unknown);
}

TEST_CASE("Tight moves up a chain, NotTight moves down")
{
    const auto p = named_poset(4, ClassifyMode::Catalog);
    // the finest class (trivial group) and the coarsest (S4)
    int finest = -1, coarsest = -1;
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
        if (p.classes[i].structure.dimension() == 15)
            finest = i;
        if (p.classes[i].structure.dimension() == 4)
            coarsest = i;
    }
    REQUIRE(finest >= 0);
    REQUIRE(coarsest >= 0);
    {
        Statuses st(p.size());
        assign(st, p, finest, Tightness::Tight, given());
        propagate(p, st);
        for (const auto& s : st)
            CHECK(s.value == Tightness::Tight);
        CHECK(st[coarsest].provenance.front().source == "Theorem 2");
    }
    {
        Statuses st(p.size());
        assign(st, p, coarsest, Tightness::NotTight, given());
        propagate(p, st);
        for (const auto& s : st)
            CHECK(s.value == Tightness::NotTight);
    }
}

TEST_CASE("conflicting statuses raise a contradiction")
{
    const auto p = named_poset(4, ClassifyMode::Catalog);
    Statuses st(p.size());
    assign(st, p, 0, Tightness::Tight, given());
    CHECK_THROWS_AS(assign(st, p, 0, Tightness::NotTight, given()), ClassificationContradiction);
}

TEST_CASE("degrees up to 3 are all Tight, 4 and 5 resolve completely")
{
    for (int n = 1; n <= 5; ++n) {
        const auto r = classify_degree(n);
        CHECK(r.complete());
        if (n <= 3)
            CHECK(r.tight_classes().size() == r.poset.size());
    }
}

TEST_CASE("degree 6 classification")
{
    const auto& r = degree6();
    REQUIRE(r.complete());
    std::set<std::string> tight;
    for (int i : r.tight_classes())
        for (const auto& n : r.poset.classes[i].names)
            tight.insert(n);
    CHECK(tight == std::set<std::string>{"S6", "A6", "PGL2(5)", "PSL2(5)", "S1xS5", "S1xA5", "S1xAGL1(5)"});
}

TEST_CASE("statuses are monotone and critical sets are antichains")
{
    const auto& r = degree6();
    const auto& p = r.poset;
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        for (int j = 0; j < static_cast<int>(p.size()); ++j)
            if (p.less(i, j)) {
                if (r.status[i].value == Tightness::Tight)
                    CHECK(r.status[j].value == Tightness::Tight);
                if (r.status[j].value == Tightness::NotTight)
                    CHECK(r.status[i].value == Tightness::NotTight);
            }
    for (const auto* set : {&r.critical.minimal_tight, &r.critical.maximal_not_tight})
        for (int a : *set)
            for (int b : *set)
                CHECK_FALSE(p.less(a, b));
}

TEST_CASE("critical classes determine everything, and each one is needed")
{
    const auto& r = degree6();
    std::vector<std::pair<int, Tightness>> seeds;
    for (int i : r.critical.minimal_tight)
        seeds.emplace_back(i, Tightness::Tight);
    for (int i : r.critical.maximal_not_tight)
        seeds.emplace_back(i, Tightness::NotTight);

    auto resolved = [&](std::size_t skip) {
        Statuses st(r.poset.size());
        for (std::size_t k = 0; k < seeds.size(); ++k)
            if (k != skip)
                assign(st, r.poset, seeds[k].first, seeds[k].second, given());
        propagate(r.poset, st);
        for (const auto& s : st)
            if (s.value == Tightness::Unknown)
                return false;
        return true;
    };
    CHECK(resolved(seeds.size()));
    for (std::size_t k = 0; k < seeds.size(); ++k)
        CHECK_FALSE(resolved(k));
}

TEST_CASE("catalog and enumeration give the same poset")
{
    for (int n = 4; n <= 6; ++n) {
        const auto a = named_poset(n, ClassifyMode::Catalog);
        const auto b = named_poset(n, ClassifyMode::Enumerate);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(b.class_of(a.classes[i].structure).has_value());
        CHECK(a.hasse_edges.size() == b.hasse_edges.size());
    }
}

TEST_CASE("report formats")
{
    const auto& r = degree6();
    const auto j = r.to_json();
    CHECK(j["degree"] == 6);
    CHECK(r.to_dot().find("digraph") != std::string::npos);
    CHECK(r.to_text().find("PSL2(5)") != std::string::npos);
}
