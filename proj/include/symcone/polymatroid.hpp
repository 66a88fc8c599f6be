#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symcone/common.hpp"
#include "symcone/orbits.hpp"

namespace symcone {

/// A set function on the subsets of {1..n}, h(empty) = 0.
///
/// `origin` records, for each current point, the point it had before the
/// minors that produced this function (restrict/contract relabel in order).
struct RankFunction {
    int n = 0;
    std::vector<Rational> values;  // indexed by mask
    std::vector<int> origin;       // origin[i-1] = former label of point i

    RankFunction() = default;
    explicit RankFunction(int degree);

    const Rational& operator()(Mask a) const { return values.at(a); }
    Rational& operator[](Mask a) { return values.at(a); }

    /// Current point carrying the given former label, if still present.
    std::optional<int> point_of_origin(int label) const;
    /// Translates a mask written in former labels.
    Mask from_origin(Mask original) const;

    bool is_integral() const;

    friend bool operator==(const RankFunction& a, const RankFunction& b)
    {
        return a.n == b.n && a.values == b.values;
    }
};

struct AxiomReport {
    bool ok = true;
    std::string violation;  // first failed condition, human readable

    explicit operator bool() const { return ok; }
};

/// Nonnegativity, monotonicity on covering pairs, local submodularity.
AxiomReport check_polymatroid(const RankFunction& h);
/// Additionally integral with unit increments.
AxiomReport check_matroid(const RankFunction& h);
inline bool is_polymatroid(const RankFunction& h) { return check_polymatroid(h).ok; }
inline bool is_matroid(const RankFunction& h) { return check_matroid(h).ok; }

/// Orbit vector to the set function that is constant on orbits.
RankFunction expand(const OrbitStructure& s, const RatVector& v);
RankFunction expand(const OrbitStructure& s, const IntVector& v);

/// Orbit vector of a function constant on the orbits of s; throws otherwise.
RatVector collapse(const OrbitStructure& s, const RankFunction& h);

/// h restricted to Y, points renumbered 1..|Y| in increasing order.
RankFunction restrict(const RankFunction& h, Mask y);
/// h'(A) = h(A u X) - h(X) on N \ X, renumbered in increasing order.
RankFunction contract(const RankFunction& h, Mask x);
/// Restriction to Y of the contraction by X (X, Y disjoint), in original labels.
RankFunction minor(const RankFunction& h, Mask contract_set, Mask restrict_set);

/// Embeds h into a ground set of `degree` points: the points of h go, in
/// order, to the complement of `loops`; h'(A) = h(A minus loops).
RankFunction add_loops(const RankFunction& h, Mask loops, int degree);

RankFunction sum(const RankFunction& a, const RankFunction& b);
RankFunction scale(const RankFunction& h, const Rational& c);
RankFunction relabel(const RankFunction& h, const Permutation& sigma);  // h'(sigma(A)) = h(A)

/// U_{i,n}: h(A) = min(|A|, i).
RankFunction uniform(int i, int n);

/// If h is c * U_{i,n} with c > 0, returns i.
std::optional<int> uniform_rank(const RankFunction& h);

/// Piecewise definitions: the first case whose predicate matches wins.
struct Case {
    std::function<bool(Mask)> predicate;
    Rational value;
    std::string description;
};

Case card_equals(int k, Rational value);
Case card_at_least(int k, Rational value);
Case in_sets(std::vector<Mask> sets, Rational value);
/// Orbit of `representative` in s, frozen into an explicit list.
Case in_orbit(const OrbitStructure& s, Mask representative, Rational value);
Case otherwise(Rational value);

/// Throws std::invalid_argument when some nonempty subset matches no case.
RankFunction from_cases(int n, const std::vector<Case>& cases);

}  // namespace symcone
