#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "symcone/certificates.hpp"
#include "symcone/orbits.hpp"
#include "symcone/ray_enum.hpp"

namespace symcone {

enum class Tightness { Unknown, Tight, NotTight };

std::string to_string(Tightness t);

struct Justification {
    std::string source;  // "certificate", "Theorem 1", "Theorem 2", "Theorem 3", "Lemma 2", "degree <= 3"
    std::string detail;
    int from = -1;  // source class for Theorem 2

    std::string text() const { return detail.empty() ? source : source + ": " + detail; }
};

struct TightnessStatus {
    Tightness value = Tightness::Unknown;
    std::vector<Justification> provenance;
};

using Statuses = std::vector<TightnessStatus>;

/// Raised when one class is forced both Tight and NotTight.
class ClassificationContradiction : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Reference structures used by the knowledge base.

/// S_{N_1} x ... x S_{N_t} with blocks taken as consecutive points.
OrbitStructure young_structure(const std::vector<int>& partition);
OrbitStructure cyclic_structure(int n);
OrbitStructure dihedral_structure(int n);
/// Adds a fixed point 1 in front of a structure on n points (S_1 x G).
OrbitStructure with_fixed_point(const OrbitStructure& s);

/// Integer partitions of n, parts descending.
std::vector<std::vector<int>> integer_partitions(int n);

/// Sets a status, or throws ClassificationContradiction on a conflicting one.
void assign(Statuses& st, const StructurePoset& p, int cls, Tightness value, Justification why);

/// Theorems 1 and 3 and, given statuses at degree n-1, Lemma 2 with G_2 = S_1.
/// Ambiguous or unmatched patterns are appended to `flags`.
Statuses seed_known(const StructurePoset& p,
                    const StructurePoset* lower = nullptr,
                    const Statuses* lower_status = nullptr,
                    std::vector<std::string>* flags = nullptr);

struct ClassCertificate {
    Tightness value = Tightness::Unknown;
    VRep vrep;
    std::vector<RayStatus> rays;
    std::string summary;
};

/// Matrices built from the structure itself: for every pair of disjoint Fano
/// planes inside one orbit of 3-sets, F1 + F2 and F1* + F2* over GF(2).
std::vector<GFMatrix> derived_evidence(const OrbitStructure& s);

/// Tight if every extreme ray is almost entropic, NotTight if one is not entropic.
/// Rays without a matrix or Zhang-Yeung certificate get a cyclic representation search
/// with the given budget. With stop_early, certification ends at the first non-entropic ray.
ClassCertificate certify_class(const OrbitStructure& s, const std::vector<GFMatrix>& evidence, bool stop_early = true,
                               std::uint64_t search_budget = std::uint64_t{1} << 24);

/// Theorem 2 fixpoint: Tight moves to coarser classes, NotTight to finer ones.
void propagate(const StructurePoset& p, Statuses& st);

struct CriticalSets {
    std::vector<int> minimal_tight;
    std::vector<int> maximal_not_tight;
};

CriticalSets critical_classes(const StructurePoset& p, const Statuses& st);

enum class ClassifyMode { Enumerate, Catalog };

struct ClassifyOptions {
    ClassifyMode mode = ClassifyMode::Catalog;
    // Classes with larger cones are never certified directly.
    int max_certify_dimension = 16;
    std::vector<GFMatrix> evidence;  // defaults to the shipped matrices when empty
    bool load_shipped_evidence = true;
};

struct CertificationRecord {
    int cls = -1;
    ClassCertificate certificate;
};

struct FixtureComparison {
    bool available = false;
    std::vector<std::string> mismatches;
    std::vector<std::string> notes;  // names that could not be resolved
    bool ok() const { return available && mismatches.empty(); }
};

struct ClassificationReport {
    int degree = 0;
    StructurePoset poset;
    Statuses status;
    CriticalSets critical;
    std::vector<int> unknown;
    std::vector<CertificationRecord> certified;
    std::vector<std::string> flags;
    FixtureComparison fixture;

    bool complete() const { return unknown.empty(); }
    std::vector<int> tight_classes() const;

    nlohmann::json to_json() const;
    std::string to_text() const;
    std::string to_dot() const;
};

/// Class representatives of S_n: enumerated, or read from the frozen catalog.
std::vector<PermGroup> class_representatives(int n, ClassifyMode mode);

/// Poset over the representatives with names attached from the group catalog.
StructurePoset named_poset(int n, ClassifyMode mode);

ClassificationReport classify_degree(int n, const ClassifyOptions& opt = {});

/// Compares against the expected lists in data/fixtures/classification.json.
FixtureComparison compare_with_fixture(const ClassificationReport& r);

}  // namespace symcone
