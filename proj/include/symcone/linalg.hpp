#pragma once

#include <vector>

#include "symcone/common.hpp"
#include "symcone/shannon_cone.hpp"

namespace symcone {

// Exact dense linear algebra over the rationals. Sizes here are tiny
// (at most a few hundred rows of width <= 127), so nothing is sparse.

RatVector to_rational(const Row& r);
RatVector to_rational(const IntVector& r);

/// Row echelon rank over Q.
int rank(std::vector<RatVector> rows);
int rank_of_rows(const std::vector<Row>& rows, const std::vector<int>& which);

/// Basis of {x : rows . x = 0} for vectors of the given width.
std::vector<RatVector> nullspace(std::vector<RatVector> rows, int width);

/// Scales a rational vector to the primitive integer vector with the same direction.
IntVector primitive_integer(const RatVector& v);
IntVector primitive_integer(IntVector v);

Integer dot(const Row& a, const IntVector& x);
Rational dot(const Row& a, const RatVector& x);

}  // namespace symcone
