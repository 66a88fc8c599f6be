#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcone/common.hpp"
#include "symcone/perm.hpp"

namespace symcone {

/// Partition of 2^N into orbits of a permutation group.
///
/// Nonempty orbits are indexed 0..dimension()-1 in canonical order: by
/// cardinality, then by their label, the lexicographically smallest member.
/// The empty set forms its own orbit and carries index -1.
struct OrbitStructure {
    int n = 0;
    std::vector<int> orbit_of;               // indexed by mask
    std::vector<std::vector<Mask>> orbits;   // members in canonical order
    std::vector<std::vector<bool>> order;    // order[a][b]: orbit a <= orbit b

    int dimension() const { return static_cast<int>(orbits.size()); }
    int index_of(Mask m) const { return orbit_of.at(m); }
    Mask label(int k) const { return orbits.at(k).front(); }
    std::string label_string(int k) const { return "O(" + mask_label(label(k)) + ")"; }

    /// Per cardinality, the sorted list of orbit sizes. Relabeling-invariant.
    std::vector<std::vector<int>> profile() const;

    friend bool operator==(const OrbitStructure& a, const OrbitStructure& b)
    {
        return a.n == b.n && a.orbit_of == b.orbit_of;
    }
};

OrbitStructure orbit_structure(int n, const std::vector<Permutation>& generators);
OrbitStructure orbit_structure(const PermGroup& g);

/// Builds the structure from an explicit partition of the nonempty subsets.
OrbitStructure structure_from_partition(int n, const std::vector<std::vector<Mask>>& parts);

/// The structure obtained by renaming every point i to sigma(i).
OrbitStructure relabel(const OrbitStructure& s, const Permutation& sigma);

/// True iff every orbit of `finer` lies inside one orbit of `coarser`.
bool refines(const OrbitStructure& finer, const OrbitStructure& coarser);

struct CanonicalForm {
    // code[m] is the smallest mask in the orbit of m after relabeling.
    std::vector<Mask> code;
    // Relabeling that carries the structure onto the canonical one.
    Permutation witness;
};

/// Lexicographically least relabeled code over all of S_n.
CanonicalForm canonical_form(const OrbitStructure& s);

/// sigma with relabel(a, sigma) == b, if one exists.
std::optional<Permutation> structures_isomorphic(const OrbitStructure& a, const OrbitStructure& b);

/// sigma with refines(relabel(finer, sigma), coarser), if one exists.
std::optional<Permutation> refines_up_to_relabeling(const OrbitStructure& finer, const OrbitStructure& coarser);

struct PosetClass {
    std::string id;
    OrbitStructure structure;        // canonical representative
    std::vector<std::size_t> members;  // indices into the input group list
    std::vector<std::string> names;    // non-empty member names
};

/// Equivalence classes of orbit structures ordered by refinement.
/// leq[i][j] holds when class i refines class j (i is finer).
struct StructurePoset {
    int degree = 0;
    std::vector<PosetClass> classes;
    std::vector<std::vector<bool>> leq;
    std::vector<std::pair<int, int>> hasse_edges;  // (finer, coarser) covering pairs

    std::size_t size() const { return classes.size(); }
    std::optional<int> class_of(const OrbitStructure& s) const;
    std::optional<int> class_of(const PermGroup& g) const { return class_of(orbit_structure(g)); }
    bool less(int i, int j) const { return i != j && leq[i][j]; }
    std::string display_name(int i) const;

    std::map<std::vector<Mask>, int> index;  // canonical code -> class
};

StructurePoset build_poset(const std::vector<PermGroup>& reps);

/// Deterministic DOT rendering. `fill` optionally maps class index to a color.
std::string hasse_dot(const StructurePoset& p, const std::map<int, std::string>& fill = {});

}  // namespace symcone
