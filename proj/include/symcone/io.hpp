#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "symcone/certificates.hpp"
#include "symcone/polymatroid.hpp"
#include "symcone/ray_enum.hpp"

namespace symcone {

using json = nlohmann::json;

/// $SYMCONE_DATA_DIR if set, else the compiled-in data directory.
std::filesystem::path data_dir();

std::string read_text(const std::filesystem::path& path);
json read_json(const std::filesystem::path& path);

// --- group catalog ---------------------------------------------------------

struct CatalogEntry {
    std::string name;
    int degree = 0;
    std::vector<std::string> generators;
    std::string note;
    std::optional<PermGroup> group;  // absent when a generator fails to parse
    std::string error;
};

std::vector<CatalogEntry> load_group_catalog(const std::filesystem::path& path);
const CatalogEntry* find_group(const std::vector<CatalogEntry>& catalog, const std::string& name);
/// Looks a name up case-insensitively, ignoring punctuation ("PSL2_5" finds "PSL2(5)").
const CatalogEntry* find_group_loose(const std::vector<CatalogEntry>& catalog, const std::string& name);

json group_to_json(const PermGroup& g);
PermGroup group_from_json(const json& j);

// --- certificates ----------------------------------------------------------

GFMatrix matrix_from_json(const json& j);
json matrix_to_json(const GFMatrix& m);
GFMatrix load_matrix(const std::filesystem::path& path);
/// Every *.json file of a directory, sorted by file name.
std::vector<GFMatrix> load_matrices(const std::filesystem::path& dir);

// --- rank functions and cones ----------------------------------------------

json rank_function_to_json(const RankFunction& h);
RankFunction rank_function_from_json(const json& j);

/// Case list as stored in the fixtures ({card|card_at_least|orbit|sets|otherwise, value}).
RankFunction rank_function_from_cases(int degree, const json& cases, const OrbitStructure* s);

json structure_to_json(const OrbitStructure& s);
std::vector<std::string> orbit_labels(const OrbitStructure& s);

json hrep_to_json(const HRep& h);
std::string hrep_to_csv(const HRep& h);
json vrep_to_json(const VRep& v);
std::string vrep_to_csv(const VRep& v);

std::string to_string(const IntVector& v);
std::string to_string(const Row& r);

}  // namespace symcone
