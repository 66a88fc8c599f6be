#include "symcone/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace symcone {

std::filesystem::path data_dir()
{
    if (const char* env = std::getenv("SYMCONE_DATA_DIR"); env && *env)
        return env;
    return SYMCONE_DATA_DIR;
}

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json read_json(const std::filesystem::path& path)
{
    try {
        return json::parse(read_text(path));
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

std::vector<CatalogEntry> load_group_catalog(const std::filesystem::path& path)
{
    std::vector<CatalogEntry> out;
    for (const auto& j : read_json(path)) {
        CatalogEntry e;
        e.name = j.at("name").get<std::string>();
        e.degree = j.at("degree").get<int>();
        e.generators = j.at("generators").get<std::vector<std::string>>();
        e.note = j.value("note", "");
        try {
            std::vector<Permutation> gens;
            for (const auto& g : e.generators)
                gens.push_back(parse_perm(g, e.degree));
            e.group = group_closure(gens, e.name);
        } catch (const std::exception& ex) {
            e.error = ex.what();
        }
        out.push_back(std::move(e));
    }
    return out;
}

const CatalogEntry* find_group(const std::vector<CatalogEntry>& catalog, const std::string& name)
{
    for (const auto& e : catalog)
        if (e.name == name)
            return &e;
    return nullptr;
}

namespace {

std::string squash(const std::string& s)
{
    std::string out;
    for (char c : s)
        if (std::isalnum(static_cast<unsigned char>(c)))
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

const CatalogEntry* find_group_loose(const std::vector<CatalogEntry>& catalog, const std::string& name)
{
    if (auto e = find_group(catalog, name))
        return e;
    for (const auto& e : catalog)
        if (squash(e.name) == squash(name))
            return &e;
    return nullptr;
}

json group_to_json(const PermGroup& g)
{
    json gens = json::array();
    for (const auto& p : g.generators)
        gens.push_back(p.to_cycle_string());
    return {{"name", g.name}, {"degree", g.degree}, {"order", g.order()}, {"generators", gens}};
}

PermGroup group_from_json(const json& j)
{
    const int n = j.at("degree").get<int>();
    std::vector<Permutation> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back(parse_perm(g.get<std::string>(), n));
    if (gens.empty())
        gens.push_back(Permutation::identity(n));
    return group_closure(gens, j.value("name", ""));
}

GFMatrix matrix_from_json(const json& j)
{
    GFMatrix m;
    m.name = j.value("name", "");
    m.p = j.at("p").get<int>();
    m.rows = j.at("rows").get<int>();
    m.entries = j.at("entries").get<std::vector<int>>();
    m.cols = j.contains("cols") ? j.at("cols").get<int>()
                                : (m.rows ? static_cast<int>(m.entries.size()) / m.rows : 0);
    const auto& bm = j.at("block_map");
    m.blocks.assign(bm.size(), {});
    for (auto it = bm.begin(); it != bm.end(); ++it) {
        const int point = std::stoi(it.key());
        if (point < 1 || point > static_cast<int>(bm.size()))
            throw std::invalid_argument("block_map: points must be 1.." + std::to_string(bm.size()));
        m.blocks[point - 1] = it.value().get<std::vector<int>>();
    }
    m.validate();
    return m;
}

json matrix_to_json(const GFMatrix& m)
{
    json bm = json::object();
    for (int i = 0; i < m.degree(); ++i)
        bm[std::to_string(i + 1)] = m.blocks[i];
    return {{"name", m.name}, {"p", m.p}, {"rows", m.rows}, {"cols", m.cols}, {"block_map", bm}, {"entries", m.entries}};
}

GFMatrix load_matrix(const std::filesystem::path& path)
{
    try {
        return matrix_from_json(read_json(path));
    } catch (const json::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

std::vector<GFMatrix> load_matrices(const std::filesystem::path& dir)
{
    if (!std::filesystem::is_directory(dir))
        throw std::runtime_error("certificate directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".json")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<GFMatrix> out;
    for (const auto& f : files)
        out.push_back(load_matrix(f));
    return out;
}

json rank_function_to_json(const RankFunction& h)
{
    json values = json::object();
    for (Mask a = 0; a <= full_mask(h.n); ++a)
        values[mask_label(a)] = h(a).get_str();
    return {{"n", h.n}, {"values", values}};
}

RankFunction rank_function_from_json(const json& j)
{
    RankFunction h(j.at("n").get<int>());
    for (auto it = j.at("values").begin(); it != j.at("values").end(); ++it) {
        const Mask a = it.key().empty() ? 0 : parse_mask(it.key());
        if (a > full_mask(h.n))
            throw std::invalid_argument("rank function: subset " + it.key() + " outside the ground set");
        h[a] = it.value().is_string() ? Rational(it.value().get<std::string>()) : Rational(it.value().get<long>());
        h[a].canonicalize();
    }
    return h;
}

RankFunction rank_function_from_cases(int degree, const json& cases, const OrbitStructure* s)
{
    std::vector<Case> list;
    for (const auto& c : cases) {
        const Rational value(c.at("value").get<long>());
        if (c.contains("card"))
            list.push_back(card_equals(c["card"].get<int>(), value));
        else if (c.contains("card_at_least"))
            list.push_back(card_at_least(c["card_at_least"].get<int>(), value));
        else if (c.contains("orbit")) {
            if (!s)
                throw std::invalid_argument("orbit case needs an orbit structure");
            list.push_back(in_orbit(*s, parse_mask(c["orbit"].get<std::string>()), value));
        } else if (c.contains("sets")) {
            std::vector<Mask> sets;
            for (const auto& t : c["sets"])
                sets.push_back(parse_mask(t.get<std::string>()));
            list.push_back(in_sets(sets, value));
        } else if (c.contains("otherwise"))
            list.push_back(otherwise(value));
        else
            throw std::invalid_argument("unknown case kind: " + c.dump());
    }
    return from_cases(degree, list);
}

std::vector<std::string> orbit_labels(const OrbitStructure& s)
{
    std::vector<std::string> out;
    for (int k = 0; k < s.dimension(); ++k)
        out.push_back(s.label_string(k));
    return out;
}

json structure_to_json(const OrbitStructure& s)
{
    json orbits = json::array();
    for (int k = 0; k < s.dimension(); ++k) {
        json members = json::array();
        for (Mask m : s.orbits[k])
            members.push_back(mask_points(m));
        orbits.push_back({{"label", s.label_string(k)}, {"size", s.orbits[k].size()}, {"members", members}});
    }
    json order = json::array();
    for (int a = 0; a < s.dimension(); ++a)
        for (int b = 0; b < s.dimension(); ++b)
            if (a != b && s.order[a][b])
                order.push_back({s.label_string(a), s.label_string(b)});
    return {{"n", s.n}, {"dimension", s.dimension()}, {"orbits", orbits}, {"order", order}};
}

std::string to_string(const IntVector& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? " " : "") + v[i].get_str();
    return out;
}

std::string to_string(const Row& r)
{
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i)
        out += (i ? " " : "") + std::to_string(r[i]);
    return out;
}

namespace {

std::string csv_header(const OrbitStructure& s)
{
    std::string out;
    for (const auto& l : orbit_labels(s))
        out += (out.empty() ? "" : ",") + l;
    return out + "\n";
}

}  // namespace

json hrep_to_json(const HRep& h)
{
    return {{"labels", orbit_labels(h.structure)}, {"rows", h.rows}};
}

std::string hrep_to_csv(const HRep& h)
{
    std::string out = csv_header(h.structure);
    for (const auto& r : h.rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
            out += (i ? "," : "") + std::to_string(r[i]);
        out += "\n";
    }
    return out;
}

json vrep_to_json(const VRep& v)
{
    json rays = json::array();
    for (const auto& r : v.rays) {
        json row = json::array();
        for (const auto& x : r)
            row.push_back(x.fits_slong_p() ? json(x.get_si()) : json(x.get_str()));
        rays.push_back(row);
    }
    return {{"labels", orbit_labels(v.structure)}, {"rays", rays}, {"tight_rows", v.tight}};
}

std::string vrep_to_csv(const VRep& v)
{
    std::string out = csv_header(v.structure);
    for (const auto& r : v.rays) {
        for (std::size_t i = 0; i < r.size(); ++i)
            out += (i ? "," : "") + r[i].get_str();
        out += "\n";
    }
    return out;
}

}  // namespace symcone
