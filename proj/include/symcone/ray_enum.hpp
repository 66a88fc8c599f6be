#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "symcone/shannon_cone.hpp"

namespace symcone {

/// Extreme rays of an HRep cone as primitive integer vectors in orbit coordinates.
struct VRep {
    OrbitStructure structure;
    std::vector<IntVector> rays;          // sorted lexicographically
    std::vector<std::vector<int>> tight;  // per ray, indices of rows with a.r == 0

    std::size_t size() const { return rays.size(); }
};

class NotPointedError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct DDOptions {
    // Row insertion order. Defaults to ascending number of nonzero entries.
    std::optional<std::vector<int>> insertion_order;
};

/// Incremental double description. The cone must be pointed; the starting
/// simplicial cone comes from the first d independent rows in insertion order,
/// and each further row splits the rays into +/0/- classes. New rays arise
/// only from (+,-) pairs that pass the combinatorial adjacency test.
VRep double_description(const HRep& h, const DDOptions& options = {});

/// Rank test: the rows tight at r have rank dimension - 1. Throws if r is infeasible.
bool verify_extremality(const HRep& h, const IntVector& r);

/// Exhaustive oracle: every set of d-1 independent rows spans a candidate line.
/// Throws std::length_error above `max_dimension`.
VRep cross_check_brute(const HRep& h, int max_dimension = 9);

struct CompletenessReport {
    bool complete = false;
    std::vector<IntVector> missing;    // neighbours found outside the ray set
    std::size_t edges_checked = 0;
};

/// Checks a set of extreme rays for completeness by walking the edge graph:
/// from every ray, each edge direction of its tangent cone is followed to the
/// neighbouring ray, which must already be in the set. The edge graph of a
/// pointed cone is connected, so a closed nonempty set is the whole V-rep.
CompletenessReport verify_completeness(const HRep& h, const std::vector<IntVector>& rays);

/// Attaches tight-row sets and sorts; used to normalize ray lists.
VRep make_vrep(const HRep& h, std::vector<IntVector> rays);

}  // namespace symcone
