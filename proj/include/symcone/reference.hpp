#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "symcone/ray_enum.hpp"

namespace symcone {

/// A transcribed cone table: column labels, inequality rows and ray rows.
struct ReferenceTable {
    std::string name;
    std::string table;
    int degree = 0;
    std::vector<std::string> generators;
    std::vector<Mask> labels;
    std::vector<Row> hrep;
    std::vector<int> uniform_ranks;  // rays given by name as U_{i,n}
    std::vector<Row> vrep;

    PermGroup group() const;
};

std::vector<ReferenceTable> load_reference_tables(const std::filesystem::path& path);

/// How the table's columns line up with the orbits of a structure.
struct ColumnMatch {
    std::vector<int> orbit_of_column;  // table column -> orbit index (-1 if unmatched)
    std::vector<int> uncovered;        // orbits no column refers to
    bool bijective = false;
};

/// Column k refers to the orbit containing sigma^-1(labels[k]).
ColumnMatch match_columns(const OrbitStructure& s, const std::vector<Mask>& labels, const Permutation& sigma);

struct TableDiff {
    bool equal = false;
    std::size_t computed_count = 0;
    std::size_t reference_count = 0;
    std::size_t common = 0;
    Permutation relabeling;            // applied to the table labels; identity when content matches directly
    std::vector<Row> only_computed;    // primitive, in table column order
    std::vector<Row> only_reference;   // primitive, as printed
    std::vector<std::string> remarks;  // per only_reference row, filled by annotate_*
    std::vector<bool> infeasible;      // per only_reference row: violates a computed inequality (annotate_vrep)
    std::vector<int> uncovered;        // orbits missing from the table's columns
    std::vector<int> column_permutation;  // table column k read as column column_permutation[k]
    std::string note;
};

/// Set comparison of rows, trying the labels as printed first, then every
/// relabeling of the points, then permutations of the table's columns among
/// orbits of equal cardinality. The best candidate (most common rows) is kept.
TableDiff compare_rows(const OrbitStructure& s, const std::vector<Row>& computed, const std::vector<Mask>& labels,
                       const std::vector<Row>& reference);

TableDiff compare_hrep(const HRep& h, const ReferenceTable& ref);
/// Rays are compared up to positive scaling; U_{i,n} entries are expanded first.
TableDiff compare_vrep(const VRep& v, const ReferenceTable& ref);

/// Explains each table-only inequality: implied by the computed rays or violated by one.
void annotate_hrep(TableDiff& d, const VRep& rays, const ReferenceTable& ref);
/// Explains each table-only ray: off by one column from a computed ray, infeasible, or not extreme.
void annotate_vrep(TableDiff& d, const HRep& h, const ReferenceTable& ref);

/// When the table lists fewer orbits than the structure has, tries merging
/// each unlisted orbit into a listed orbit of the same cardinality and
/// compares the resulting cone's inequalities. Returns the merged structure
/// whose inequalities match, if any.
std::optional<OrbitStructure> find_merged_structure(const OrbitStructure& s, const ReferenceTable& ref);

/// Orbit vector of U_{i,n} in a structure.
IntVector uniform_vector(const OrbitStructure& s, int i);

std::string describe(const TableDiff& d, const OrbitStructure& s);

}  // namespace symcone
