#pragma once

#include <cstdint>
#include <vector>

#include "symcone/orbits.hpp"

namespace symcone {

using Row = std::vector<std::int64_t>;

/// Elemental Shannon inequalities of degree n as rows a with a.h >= 0.
///
/// Coordinates are the nonempty subsets: column m-1 holds mask m. Rows come
/// in two families, h(N) - h(N\i) and h(iK) + h(jK) - h(K) - h(ijK) for
/// i < j and K avoiding both; the h(empty) term is dropped.
std::vector<Row> elemental_inequalities(int n);

/// Sums full-space coefficients over each orbit and reduces to primitive form.
Row symmetrize(const Row& full, const OrbitStructure& s);

/// Divides by the gcd of the entries. The zero row is returned unchanged.
Row primitive(Row r);

/// Integer inequality description {s : rows[k] . s >= 0} in orbit coordinates.
struct HRep {
    OrbitStructure structure;
    std::vector<Row> rows;

    int dimension() const { return structure.dimension(); }
};

/// Symmetrized elemental inequalities, deduplicated, in lexicographic order.
HRep build_hrep(const OrbitStructure& s);

}  // namespace symcone
