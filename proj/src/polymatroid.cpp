#include "symcone/polymatroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace symcone {

namespace {

// Packs the bits of `a` selected by `support` into the low bits, in order.
Mask compress(Mask a, Mask support)
{
    Mask out = 0;
    int k = 0;
    for (Mask s = support; s; s &= s - 1) {
        const Mask bit = s & -s;
        if (a & bit)
            out |= Mask{1} << k;
        ++k;
    }
    return out;
}

// Inverse of compress: spreads low bits onto the set bits of `support`.
Mask expand_bits(Mask a, Mask support)
{
    Mask out = 0;
    int k = 0;
    for (Mask s = support; s; s &= s - 1) {
        if (a & (Mask{1} << k))
            out |= s & -s;
        ++k;
    }
    return out;
}

std::vector<int> origin_of(const RankFunction& h, Mask support)
{
    std::vector<int> out;
    for (int p : mask_points(support))
        out.push_back(h.origin[p - 1]);
    return out;
}

void check_degree(int n)
{
    if (n < 0 || n > kMaxDegree)
        throw std::invalid_argument("rank functions support degrees 0.." + std::to_string(kMaxDegree));
}

}  // namespace

RankFunction::RankFunction(int degree) : n(degree)
{
    check_degree(degree);
    values.assign(std::size_t{1} << degree, Rational(0));
    origin.resize(degree);
    std::iota(origin.begin(), origin.end(), 1);
}

std::optional<int> RankFunction::point_of_origin(int label) const
{
    for (int i = 0; i < n; ++i)
        if (origin[i] == label)
            return i + 1;
    return std::nullopt;
}

Mask RankFunction::from_origin(Mask original) const
{
    Mask out = 0;
    for (int p : mask_points(original)) {
        auto q = point_of_origin(p);
        if (!q)
            throw std::invalid_argument("point " + std::to_string(p) + " is not in the ground set");
        out |= point_bit(*q);
    }
    return out;
}

bool RankFunction::is_integral() const
{
    return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v.get_den() == 1; });
}

AxiomReport check_polymatroid(const RankFunction& h)
{
    const Mask all = full_mask(h.n);
    if (h.values.size() != std::size_t{all} + 1)
        return {false, "value table has the wrong size"};
    if (sgn(h(0)) != 0)
        return {false, "h({}) != 0"};
    for (Mask a = 1; a <= all; ++a)
        if (sgn(h(a)) < 0)
            return {false, "nonnegativity fails at " + mask_to_string(a)};
    for (Mask a = 0; a <= all; ++a)
        for (int i = 1; i <= h.n; ++i)
            if (!(a & point_bit(i)) && h(a | point_bit(i)) < h(a))
                return {false, "monotonicity fails: h(" + mask_to_string(a | point_bit(i)) + ") < h(" +
                                   mask_to_string(a) + ")"};
    for (Mask a = 0; a <= all; ++a)
        for (int i = 1; i <= h.n; ++i)
            for (int j = i + 1; j <= h.n; ++j) {
                const Mask bi = point_bit(i), bj = point_bit(j);
                if ((a & bi) || (a & bj))
                    continue;
                if (h(a | bi) + h(a | bj) < h(a) + h(a | bi | bj))
                    return {false, "submodularity fails at A=" + mask_to_string(a) + ", i=" + std::to_string(i) +
                                       ", j=" + std::to_string(j)};
            }
    return {};
}

AxiomReport check_matroid(const RankFunction& h)
{
    auto report = check_polymatroid(h);
    if (!report)
        return report;
    for (Mask a = 0; a <= full_mask(h.n); ++a) {
        if (h(a).get_den() != 1)
            return {false, "non-integral value at " + mask_to_string(a)};
        for (int i = 1; i <= h.n; ++i)
            if (!(a & point_bit(i)) && h(a | point_bit(i)) - h(a) > 1)
                return {false, "increment above 1 adding " + std::to_string(i) + " to " + mask_to_string(a)};
    }
    return {};
}

RankFunction expand(const OrbitStructure& s, const RatVector& v)
{
    if (static_cast<int>(v.size()) != s.dimension())
        throw std::invalid_argument("expand: vector length " + std::to_string(v.size()) + " != orbit count " +
                                    std::to_string(s.dimension()));
    RankFunction h(s.n);
    for (Mask a = 1; a <= full_mask(s.n); ++a)
        h[a] = v[s.orbit_of[a]];
    return h;
}

RankFunction expand(const OrbitStructure& s, const IntVector& v)
{
    RatVector r(v.begin(), v.end());
    return expand(s, r);
}

RatVector collapse(const OrbitStructure& s, const RankFunction& h)
{
    if (h.n != s.n)
        throw std::invalid_argument("collapse: degree mismatch");
    RatVector out;
    for (const auto& orbit : s.orbits) {
        out.push_back(h(orbit.front()));
        for (Mask m : orbit)
            if (h(m) != out.back())
                throw std::invalid_argument("collapse: function is not constant on orbit of " +
                                            mask_to_string(orbit.front()));
    }
    return out;
}

RankFunction restrict(const RankFunction& h, Mask y)
{
    if (y & ~full_mask(h.n))
        throw std::invalid_argument("restrict: subset outside the ground set");
    RankFunction out(cardinality(y));
    for (Mask a = 0; a <= full_mask(out.n); ++a)
        out[a] = h(expand_bits(a, y));
    out.origin = origin_of(h, y);
    return out;
}

RankFunction contract(const RankFunction& h, Mask x)
{
    if (x & ~full_mask(h.n))
        throw std::invalid_argument("contract: subset outside the ground set");
    const Mask rest = full_mask(h.n) & ~x;
    RankFunction out(cardinality(rest));
    for (Mask a = 0; a <= full_mask(out.n); ++a)
        out[a] = h(expand_bits(a, rest) | x) - h(x);
    out.origin = origin_of(h, rest);
    return out;
}

RankFunction minor(const RankFunction& h, Mask contract_set, Mask restrict_set)
{
    if (contract_set & restrict_set)
        throw std::invalid_argument("minor: contraction and restriction sets overlap");
    const Mask rest = full_mask(h.n) & ~contract_set;
    return restrict(contract(h, contract_set), compress(restrict_set, rest));
}

RankFunction add_loops(const RankFunction& h, Mask loops, int degree)
{
    check_degree(degree);
    const Mask support = full_mask(degree) & ~loops;
    if ((loops & ~full_mask(degree)) || cardinality(support) != h.n)
        throw std::invalid_argument("add_loops: loops must leave exactly " + std::to_string(h.n) + " points");
    RankFunction out(degree);
    for (Mask a = 0; a <= full_mask(degree); ++a)
        out[a] = h(compress(a & support, support));
    return out;
}

RankFunction sum(const RankFunction& a, const RankFunction& b)
{
    if (a.n != b.n)
        throw std::invalid_argument("sum: ground sets differ");
    RankFunction out(a.n);
    for (std::size_t i = 0; i < a.values.size(); ++i)
        out.values[i] = a.values[i] + b.values[i];
    return out;
}

RankFunction scale(const RankFunction& h, const Rational& c)
{
    RankFunction out = h;
    for (auto& v : out.values)
        v *= c;
    return out;
}

RankFunction relabel(const RankFunction& h, const Permutation& sigma)
{
    if (sigma.degree() != h.n)
        throw std::invalid_argument("relabel: degree mismatch");
    RankFunction out(h.n);
    for (Mask a = 0; a <= full_mask(h.n); ++a)
        out[sigma.apply(a)] = h(a);
    return out;
}

RankFunction uniform(int i, int n)
{
    if (i < 0 || i > n)
        throw std::invalid_argument("uniform: need 0 <= i <= n");
    RankFunction h(n);
    for (Mask a = 0; a <= full_mask(n); ++a)
        h[a] = std::min(cardinality(a), i);
    return h;
}

std::optional<int> uniform_rank(const RankFunction& h)
{
    if (h.n == 0 || sgn(h(1)) <= 0)
        return std::nullopt;
    const Rational c = h(1);
    const RankFunction unit = scale(h, 1 / c);
    for (int i = 1; i <= h.n; ++i)
        if (unit == uniform(i, h.n))
            return i;
    return std::nullopt;
}

Case card_equals(int k, Rational value)
{
    return {[k](Mask a) { return cardinality(a) == k; }, value, "|A| = " + std::to_string(k)};
}

Case card_at_least(int k, Rational value)
{
    return {[k](Mask a) { return cardinality(a) >= k; }, value, "|A| >= " + std::to_string(k)};
}

Case in_sets(std::vector<Mask> sets, Rational value)
{
    std::set<Mask> lookup(sets.begin(), sets.end());
    std::string desc = "A in {";
    for (std::size_t i = 0; i < sets.size(); ++i)
        desc += (i ? "," : "") + mask_to_string(sets[i]);
    desc += "}";
    return {[lookup](Mask a) { return lookup.count(a) > 0; }, value, desc};
}

Case in_orbit(const OrbitStructure& s, Mask representative, Rational value)
{
    const auto& members = s.orbits.at(s.index_of(representative));
    auto c = in_sets(members, value);
    c.description = "A in O(" + mask_label(representative) + ")";
    return c;
}

Case otherwise(Rational value)
{
    return {[](Mask) { return true; }, value, "otherwise"};
}

RankFunction from_cases(int n, const std::vector<Case>& cases)
{
    RankFunction h(n);
    for (Mask a = 1; a <= full_mask(n); ++a) {
        auto it = std::find_if(cases.begin(), cases.end(), [a](const Case& c) { return c.predicate(a); });
        if (it == cases.end())
            throw std::invalid_argument("from_cases: no case covers " + mask_to_string(a));
        h[a] = it->value;
    }
    return h;
}

}  // namespace symcone
