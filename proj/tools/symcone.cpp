// symcone command-line front end.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "symcone/classifier.hpp"
#include "symcone/io.hpp"
#include "symcone/verification.hpp"

using namespace symcone;
namespace fs = std::filesystem;

namespace {

struct GroupSpec {
    std::string gens;
    std::string name;
    int degree = 0;
};

void add_group_options(CLI::App* cmd, GroupSpec& g)
{
    cmd->add_option("--gens", g.gens, "generators in cycle notation, e.g. \"(123)(456),(14623)\"");
    cmd->add_option("--name", g.name, "group name from the catalog, e.g. PSL2(5) or PSL2_5");
    cmd->add_option("--degree", g.degree, "degree n (required with --gens)");
}

// Parse errors point at the offending character of the full generator string.
PermGroup resolve_group(const GroupSpec& g)
{
    if (!g.gens.empty() == !g.name.empty())
        throw std::invalid_argument("give exactly one of --gens and --name");
    if (!g.name.empty()) {
        const auto catalog = load_group_catalog(data_dir() / "groups.json");
        const auto* e = find_group_loose(catalog, g.name);
        if (!e)
            throw std::invalid_argument("unknown group name: " + g.name);
        if (g.degree && g.degree != e->degree)
            throw std::invalid_argument(e->name + " has degree " + std::to_string(e->degree));
        if (!e->group)
            throw std::invalid_argument(e->name + ": " + e->error);
        return *e->group;
    }
    if (g.degree < 1 || g.degree > kMaxDegree)
        throw std::invalid_argument("--degree must be in 1.." + std::to_string(kMaxDegree));
    std::vector<Permutation> perms;
    std::size_t cursor = 0;
    for (const auto& piece : split_generators(g.gens)) {
        const std::size_t at = piece.empty() ? cursor : g.gens.find(piece, cursor);
        try {
            perms.push_back(parse_perm(piece, g.degree));
        } catch (const ParseError& e) {
            const std::size_t pos = (at == std::string::npos ? 0 : at) + e.position();
            throw std::invalid_argument("parse error in generators at position " + std::to_string(pos) + ": " +
                                        e.what() + "\n  " + g.gens + "\n  " + std::string(pos, ' ') + "^");
        }
        if (at != std::string::npos)
            cursor = at + piece.size();
    }
    return group_closure(perms);
}

void check_format(const std::string& f, std::initializer_list<const char*> allowed)
{
    for (const char* a : allowed)
        if (f == a)
            return;
    std::string list;
    for (const char* a : allowed)
        list += (list.empty() ? "" : "|") + std::string(a);
    throw std::invalid_argument("unsupported format '" + f + "' (expected " + list + ")");
}

// Writes to <out>/<file> when an output directory is set, else to stdout.
void emit(const std::string& out_dir, const std::string& file, const std::string& text)
{
    if (out_dir.empty()) {
        std::cout << text;
        return;
    }
    fs::create_directories(out_dir);
    const fs::path path = fs::path(out_dir) / file;
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot write " + path.string());
    f << text;
    std::cerr << "wrote " << path.string() << "\n";
}

std::string orbits_text(const OrbitStructure& s)
{
    std::ostringstream os;
    os << "degree " << s.n << ", " << s.dimension() << " nonempty orbits\n";
    for (int k = 0; k < s.dimension(); ++k) {
        os << s.label_string(k) << "  size " << s.orbits[k].size() << ":";
        for (Mask m : s.orbits[k])
            os << " " << mask_label(m);
        os << "\n";
    }
    return os.str();
}

std::string orbits_csv(const OrbitStructure& s)
{
    std::ostringstream os;
    os << "orbit,label,size,members\n";
    for (int k = 0; k < s.dimension(); ++k) {
        os << k << "," << mask_label(s.label(k)) << "," << s.orbits[k].size() << ",";
        for (std::size_t i = 0; i < s.orbits[k].size(); ++i)
            os << (i ? " " : "") << mask_label(s.orbits[k][i]);
        os << "\n";
    }
    return os.str();
}

std::string slug(const PermGroup& g)
{
    std::string out;
    for (char c : g.name.empty() ? std::string("group") : g.name)
        out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"symmetric Shannon cones: orbits, cones, rays, certificates, classification"};
    app.require_subcommand(1);
    std::string data, out_dir;
    if (const char* env = std::getenv("SYMCONE_OUT"))
        out_dir = env;
    app.add_option("--data", data, "data directory (default: $SYMCONE_DATA_DIR or the built-in one)");
    app.add_option("--out", out_dir, "write files into this directory instead of stdout (default: $SYMCONE_OUT)");

    GroupSpec group;
    std::string format = "text";

    auto* orbits = app.add_subcommand("orbits", "orbit structure of a group on subsets");
    add_group_options(orbits, group);
    orbits->add_option("--format", format, "json|csv|text");

    auto* cone = app.add_subcommand("cone", "symmetrized elemental inequalities (H-representation)");
    add_group_options(cone, group);
    cone->add_option("--format", format, "json|csv|text");

    bool check = false;
    auto* rays = app.add_subcommand("rays", "extreme rays (V-representation)");
    add_group_options(rays, group);
    rays->add_option("--format", format, "json|csv|text");
    rays->add_flag("--check", check, "also run the brute-force oracle and compare");

    std::string certs;
    auto* certify = app.add_subcommand("certify", "certify every extreme ray");
    add_group_options(certify, group);
    certify->add_option("--certs", certs, "directory of certificate matrices (default: <data>/certificates)");
    certify->add_option("--format", format, "json|text");
    std::uint64_t search_budget = std::uint64_t{1} << 20;
    certify->add_option("--search-budget", search_budget,
                        "candidate blocks per cyclic representation search (default 2^20)");

    int degree = 0;
    std::string mode = "catalog";
    auto* classify = app.add_subcommand("classify", "classify every orbit-structure class of S_n");
    classify->add_option("--degree", degree, "n")->required();
    classify->add_option("--mode", mode, "catalog|enumerate");
    classify->add_option("--format", format, "json|text|dot|all");

    auto* enumerate = app.add_subcommand("enumerate", "conjugacy classes of subgroups of S_n, as a catalog file");
    enumerate->add_option("--degree", degree, "n")->required();

    std::vector<int> only;
    bool verbose = false;
    int instances = 200;
    auto* verify = app.add_subcommand("verify-fixtures", "run every acceptance check against the shipped fixtures");
    verify->add_option("--only", only, "criterion numbers to run");
    verify->add_flag("-v,--verbose", verbose, "print details for passing checks too");
    verify->add_option("--instances", instances, "randomized instances per property suite");

    CLI11_PARSE(app, argc, argv);
    if (!data.empty())
        setenv("SYMCONE_DATA_DIR", data.c_str(), 1);

    try {
        if (*orbits) {
            check_format(format, {"json", "csv", "text"});
            const auto g = resolve_group(group);
            const auto s = orbit_structure(g);
            const std::string text = format == "json" ? structure_to_json(s).dump(2) + "\n"
                                   : format == "csv"  ? orbits_csv(s)
                                                      : orbits_text(s);
            emit(out_dir, slug(g) + "_orbits." + format, text);
        } else if (*cone) {
            check_format(format, {"json", "csv", "text"});
            const auto g = resolve_group(group);
            const auto h = build_hrep(orbit_structure(g));
            std::string text;
            if (format == "json")
                text = hrep_to_json(h).dump(2) + "\n";
            else if (format == "csv")
                text = hrep_to_csv(h);
            else {
                std::ostringstream os;
                os << h.rows.size() << " inequalities a.x >= 0 over";
                for (const auto& l : orbit_labels(h.structure))
                    os << " " << l;
                os << "\n";
                for (const auto& r : h.rows)
                    os << to_string(r) << "\n";
                text = os.str();
            }
            emit(out_dir, slug(g) + "_cone." + format, text);
        } else if (*rays) {
            check_format(format, {"json", "csv", "text"});
            const auto g = resolve_group(group);
            const auto h = build_hrep(orbit_structure(g));
            const auto v = double_description(h);
            std::string text;
            if (format == "json")
                text = vrep_to_json(v).dump(2) + "\n";
            else if (format == "csv")
                text = vrep_to_csv(v);
            else {
                std::ostringstream os;
                os << v.size() << " extreme rays over";
                for (const auto& l : orbit_labels(h.structure))
                    os << " " << l;
                os << "\n";
                for (const auto& r : v.rays)
                    os << to_string(r) << "\n";
                text = os.str();
            }
            emit(out_dir, slug(g) + "_rays." + format, text);
            if (check) {
                const auto b = cross_check_brute(h, 15);
                const bool same = b.rays == v.rays;
                std::cerr << "brute force: " << b.size() << " rays, " << (same ? "identical" : "DIFFERENT") << "\n";
                if (!same)
                    return 1;
            }
        } else if (*certify) {
            check_format(format, {"json", "text"});
            const auto g = resolve_group(group);
            const auto s = orbit_structure(g);
            const auto evidence = load_matrices(certs.empty() ? data_dir() / "certificates" : fs::path(certs));
            const auto c = certify_class(s, evidence, false, search_budget);
            std::string text;
            if (format == "json") {
                json j;
                j["group"] = g.name;
                j["generators"] = g.generator_string();
                j["orbits"] = orbit_labels(s);
                j["status"] = to_string(c.value);
                j["summary"] = c.summary;
                j["rays"] = json::array();
                for (std::size_t k = 0; k < c.rays.size(); ++k)
                    j["rays"].push_back({{"ray", to_string(c.vrep.rays[k])},
                                         {"status", to_string(c.rays[k].kind)},
                                         {"reason", c.rays[k].reason}});
                text = j.dump(2) + "\n";
            } else {
                std::ostringstream os;
                for (std::size_t k = 0; k < c.rays.size(); ++k)
                    os << to_string(c.vrep.rays[k]) << "  " << to_string(c.rays[k].kind) << "  " << c.rays[k].reason
                       << "\n";
                os << to_string(c.value) << ": " << c.summary << "\n";
                text = os.str();
            }
            emit(out_dir, slug(g) + "_certify." + format, text);
        } else if (*classify) {
            check_format(format, {"json", "text", "dot", "all"});
            if (mode != "catalog" && mode != "enumerate")
                throw std::invalid_argument("--mode must be catalog or enumerate");
            ClassifyOptions opt;
            opt.mode = mode == "enumerate" ? ClassifyMode::Enumerate : ClassifyMode::Catalog;
            const auto r = classify_degree(degree, opt);
            const std::string base = "classify_" + std::to_string(degree);
            if (format == "json" || format == "all")
                emit(out_dir, base + ".json", r.to_json().dump(2) + "\n");
            if (format == "text" || format == "all")
                emit(out_dir, base + ".txt", r.to_text());
            if (format == "dot" || format == "all")
                emit(out_dir, base + ".dot", r.to_dot());
            return r.complete() ? 0 : 1;
        } else if (*enumerate) {
            const auto reps = class_representatives(degree, ClassifyMode::Enumerate);
            std::ostringstream os;
            os << "{\"degree\": " << degree << ", \"classes\": [\n";
            for (std::size_t k = 0; k < reps.size(); ++k) {
                json gens = json::array();
                for (const auto& p : reps[k].generators)
                    gens.push_back(p.to_cycle_string());
                os << "  " << gens.dump() << (k + 1 < reps.size() ? ",\n" : "\n");
            }
            os << "]}\n";
            emit(out_dir, "degree" + std::to_string(degree) + ".json", os.str());
        } else if (*verify) {
            AcceptanceOptions opt;
            opt.only.insert(only.begin(), only.end());
            opt.property_instances = instances;
            const auto results = run_acceptance(opt);
            std::cout << format_results(results, verbose);
            for (const auto& r : results)
                if (!r.pass)
                    return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
