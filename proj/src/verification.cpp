#include "symcone/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>

#include "symcone/classifier.hpp"
#include "symcone/io.hpp"
#include "symcone/reference.hpp"

namespace symcone {

namespace {

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty())
            out.push_back(line);
    return out;
}

struct Cone {
    ReferenceTable table;
    OrbitStructure structure;
    HRep hrep;
    VRep vrep;
    std::optional<VRep> brute;  // filled on first use
};

class Fixtures {
public:
    std::vector<Cone>& cones()
    {
        if (cones_.empty()) {
            for (auto& t : load_reference_tables(data_dir() / "fixtures" / "appendix_a.json")) {
                Cone c;
                c.structure = orbit_structure(t.group());
                c.hrep = build_hrep(c.structure);
                c.vrep = double_description(c.hrep);
                c.table = std::move(t);
                cones_.push_back(std::move(c));
            }
        }
        return cones_;
    }

    Cone& cone(const std::string& name)
    {
        for (auto& c : cones())
            if (c.table.name == name)
                return c;
        throw std::runtime_error("missing fixture table " + name);
    }

    const VRep& brute(Cone& c)
    {
        if (!c.brute)
            c.brute = cross_check_brute(c.hrep, 15);
        return *c.brute;
    }

    const json& rank_fixtures()
    {
        if (rank_.is_null())
            rank_ = read_json(data_dir() / "fixtures" / "rank_functions.json");
        return rank_;
    }

    const std::vector<CatalogEntry>& catalog()
    {
        if (catalog_.empty())
            catalog_ = load_group_catalog(data_dir() / "groups.json");
        return catalog_;
    }

    OrbitStructure structure_of(const std::string& group)
    {
        const auto* e = find_group(catalog(), group);
        if (!e || !e->group)
            throw std::runtime_error("group " + group + " not in catalog");
        return orbit_structure(*e->group);
    }

    // A case-defined rank function together with its fixture entry.
    std::pair<RankFunction, json> rank_function(const std::string& name)
    {
        for (const auto& e : rank_fixtures()) {
            if (e.at("name") != name)
                continue;
            const int n = e.at("degree").get<int>();
            std::optional<OrbitStructure> s;
            if (e.contains("group"))
                s = structure_of(e["group"].get<std::string>());
            return {rank_function_from_cases(n, e.at("cases"), s ? &*s : nullptr), e};
        }
        throw std::runtime_error("missing rank function fixture " + name);
    }

private:
    std::vector<Cone> cones_;
    json rank_;
    std::vector<CatalogEntry> catalog_;
};

CriterionResult start(int id, std::string title)
{
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    return r;
}

bool proportional(const RankFunction& a, const RankFunction& b)
{
    const Mask all = full_mask(a.n);
    if (a.n != b.n || sgn(b(all)) == 0)
        return false;
    for (Mask x = 1; x <= all; ++x)
        if (a(x) * b(all) != b(x) * a(all))
            return false;
    return true;
}

// Renumbers the points of `m` inside `within` consecutively.
Mask compress(Mask m, Mask within)
{
    Mask out = 0;
    int k = 0;
    for (int i = 0; i < 32; ++i) {
        if (!(within >> i & 1))
            continue;
        if (m >> i & 1)
            out |= Mask{1} << k;
        ++k;
    }
    return out;
}

Mask mask_or_empty(const std::string& s) { return s.empty() ? Mask{0} : parse_mask(s); }

bool has_ray(const VRep& v, const std::vector<long>& r)
{
    IntVector x(r.begin(), r.end());
    return std::find(v.rays.begin(), v.rays.end(), x) != v.rays.end();
}

// --- 1 ---------------------------------------------------------------------

CriterionResult cone_fixtures(Fixtures& fx)
{
    CriterionResult res = start(1, "cone fixtures: computed H-representations equal the printed tables");
    res.pass = true;
    for (auto& c : fx.cones()) {
        auto d = compare_hrep(c.hrep, c.table);
        std::ostringstream os;
        os << c.table.name << " (" << c.table.table << "): computed " << d.computed_count << " rows, table "
           << d.reference_count << ", common " << d.common << (d.equal ? " -- equal" : " -- DIFFERENT");
        res.details.push_back(os.str());
        if (d.equal)
            continue;
        res.pass = false;
        annotate_hrep(d, c.vrep, c.table);
        for (auto& l : lines_of(describe(d, c.structure)))
            res.details.push_back("    " + l);
        if (!d.uncovered.empty()) {
            if (auto merged = find_merged_structure(c.structure, c.table))
                res.details.push_back("    the table's rows are exactly the cone of the structure with the unlisted orbit "
                                      "merged into a listed one (" + std::to_string(merged->dimension()) + " orbits)");
        }
    }
    return res;
}

// --- 2 ---------------------------------------------------------------------

CriterionResult ray_fixtures(Fixtures& fx)
{
    CriterionResult res = start(2, "ray counts and contents; printed-list typos itemized");
    bool ok = true;

    auto& psl = fx.cone("PSL2(5)");
    const bool psl_ok = psl.vrep.size() == 8 && has_ray(psl.vrep, {2, 4, 5, 6, 6, 6, 6}) &&
                        has_ray(psl.vrep, {2, 4, 6, 5, 6, 6, 6});
    res.details.push_back("PSL2(5): " + std::to_string(psl.vrep.size()) +
                          " rays, contains (2 4 5 6 6 6 6) and (2 4 6 5 6 6 6): " + (psl_ok ? "yes" : "NO"));
    ok = ok && psl_ok;

    auto& agl = fx.cone("AGL1(7)");
    int uniform = 0;
    for (const auto& r : agl.vrep.rays)
        uniform += uniform_rank(expand(agl.structure, r)).has_value();
    const bool agl_ok = agl.vrep.size() == 13 && uniform == 7;
    res.details.push_back("AGL1(7): " + std::to_string(agl.vrep.size()) + " rays, " + std::to_string(uniform) +
                          " uniform" + (agl_ok ? "" : " -- expected 13 and 7"));
    ok = ok && agl_ok;

    for (auto& c : fx.cones()) {
        const auto& brute = fx.brute(c);
        const bool same = brute.rays == c.vrep.rays;
        if (!same) {
            ok = false;
            res.details.push_back(c.table.name + ": double description and brute force DISAGREE");
        }
        auto d = compare_vrep(c.vrep, c.table);
        annotate_vrep(d, c.hrep, c.table);
        const bool projected = !d.uncovered.empty() && d.common == d.computed_count && d.common == d.reference_count;
        std::ostringstream os;
        os << c.table.name << ": computed " << d.computed_count << " rays, table " << d.reference_count << ", common "
           << d.common;
        if (d.equal)
            os << " -- equal";
        else if (projected)
            os << " -- equal on the table's columns (unlisted orbit dropped)";
        res.details.push_back(os.str());
        if (d.equal || projected)
            continue;
        // Table-only rows must be infeasible (printing errors); computed-only rays must be extreme.
        for (std::size_t i = 0; i < d.only_reference.size(); ++i) {
            const bool typo = i < d.infeasible.size() && d.infeasible[i];
            res.details.push_back("    table only " + to_string(d.only_reference[i]) + (typo ? " [typo] " : " [UNEXPLAINED] ") +
                                  d.remarks[i]);
            ok = ok && typo;
        }
        for (const auto& r : d.only_computed) {
            const bool extreme = verify_extremality(c.hrep, IntVector(r.begin(), r.end()));
            res.details.push_back("    computed only " + to_string(r) + (extreme ? " [verified extreme]" : " [NOT EXTREME]"));
            ok = ok && extreme;
        }
    }
    res.pass = ok;
    return res;
}

// --- 3 ---------------------------------------------------------------------

CriterionResult oracle_equivalence(Fixtures& fx)
{
    CriterionResult res = start(3, "double description equals the brute-force oracle on every fixture cone");
    res.pass = true;
    for (auto& c : fx.cones()) {
        const auto& brute = fx.brute(c);
        bool extreme = true;
        for (const auto& r : c.vrep.rays)
            extreme = extreme && verify_extremality(c.hrep, r);
        const bool same = brute.rays == c.vrep.rays;
        res.pass = res.pass && same && extreme;
        std::ostringstream os;
        os << c.table.name << " dim " << c.structure.dimension() << ": DD " << c.vrep.size() << " rays, brute force "
           << brute.size() << (same ? ", identical" : ", DIFFERENT") << (extreme ? ", all extreme" : ", NON-EXTREME ray");
        res.details.push_back(os.str());
    }
    return res;
}

// --- 4 ---------------------------------------------------------------------

CriterionResult representations(Fixtures& fx)
{
    CriterionResult res = start(4, "representation certificates");
    bool ok = true;
    const auto dir = data_dir() / "certificates";

    {
        const auto m = load_matrix(dir / "psl2_5_gf11.json");
        const auto [h1, e] = fx.rank_function("h1_psl2_5");
        const auto rep = verify_multilinear_rep(m, h1);
        res.details.push_back("GF(11) " + std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                              " matrix vs h1 on all 63 subsets: " +
                              (rep ? "verified" : "FAILS at " + mask_to_string(*rep.mismatch)));
        ok = ok && rep.ok;
    }

    {
        auto& agl = fx.cone("AGL1(7)");
        const auto [h1, e1] = fx.rank_function("h1_agl1_7");
        const auto [h2, e2] = fx.rank_function("h2_agl1_7");
        // The four matrices cover the non-uniform rays other than h1 and h2.
        std::vector<IntVector> targets;
        for (const auto& r : agl.vrep.rays) {
            const auto h = expand(agl.structure, r);
            if (!uniform_rank(h) && !proportional(h, h1) && !proportional(h, h2))
                targets.push_back(r);
        }
        std::vector<bool> covered(targets.size(), false);
        for (const char* name : {"agl1_7_gf2_a", "agl1_7_gf2_b", "agl1_7_gf2_c", "agl1_7_gf2_d"}) {
            const auto m = load_matrix(dir / (std::string(name) + ".json"));
            std::string line = std::string(name) + " (" + std::to_string(m.rows) + "x" + std::to_string(m.cols) + "): ";
            bool found = false;
            for (std::size_t k = 0; k < targets.size() && !found; ++k) {
                const auto h = expand(agl.structure, targets[k]);
                if (auto match = match_representation(m, h)) {
                    found = true;
                    covered[k] = true;
                    line += "represents ray (" + to_string(targets[k]) + ") on all 127 subsets";
                    if (!match->first.is_identity())
                        line += " after relabeling " + match->first.to_cycle_string();
                }
            }
            if (!found) {
                const auto r = rank_function(m);
                int best = -1;
                std::string nearest;
                for (const auto& t : targets) {
                    const auto h = expand(agl.structure, t);
                    for (const auto& sg : all_permutations(7)) {
                        int agree = 0;
                        for (Mask a = 1; a < 128; ++a)
                            agree += h(sg.apply(a)) == r(a);
                        if (agree > best) {
                            best = agree;
                            nearest = to_string(t);
                        }
                    }
                }
                line += "matches no ray under any relabeling (best: " + std::to_string(best) + "/127 subsets of (" +
                        nearest + "))";
                ok = false;
            }
            res.details.push_back(line);
        }
        for (std::size_t k = 0; k < targets.size(); ++k) {
            if (covered[k])
                continue;
            const auto h = expand(agl.structure, targets[k]);
            std::string line = "ray (" + to_string(targets[k]) + ") has no printed matrix";
            if (auto m = search_cyclic_representation(h))
                line += "; a " + std::to_string(m->rows) + "x" + std::to_string(m->cols) +
                        " GF(2) representation exists (C7-equivariant search), so the ray is still representable";
            res.details.push_back(line);
        }

        const auto [r1, f1] = fx.rank_function("r1_agl1_7");
        const auto [r2, f2] = fx.rank_function("r2_agl1_7");
        const bool sum_ok = sum(r1, r2) == h2, m1 = is_matroid(r1), m2 = is_matroid(r2);
        res.details.push_back(std::string("r1 + r2 = h2: ") + (sum_ok ? "yes" : "NO") + "; r1 matroid: " +
                              (m1 ? "yes" : "NO") + "; r2 matroid: " + (m2 ? "yes" : "NO"));
        ok = ok && sum_ok && m1 && m2;

        const int k124 = agl.structure.index_of(parse_mask("124"));
        const auto planes = fano_planes_within(agl.structure.orbits[k124]);
        bool fano_ok = false;
        for (std::size_t a = 0; a < planes.size() && !fano_ok; ++a) {
            for (std::size_t b = a + 1; b < planes.size() && !fano_ok; ++b) {
                const auto fa = fano_rank(planes[a]), fb = fano_rank(planes[b]);
                if (is_matroid(fa) && is_matroid(fb) && sum(fa, fb) == h1) {
                    fano_ok = true;
                    std::string text;
                    for (const auto* pl : {&planes[a], &planes[b]}) {
                        text += text.empty() ? "{" : " and {";
                        for (std::size_t i = 0; i < pl->size(); ++i)
                            text += (i ? " " : "") + mask_label((*pl)[i]);
                        text += "}";
                    }
                    res.details.push_back("h1 = Fano + Fano with line sets " + text + " found inside O(124)");
                }
            }
        }
        if (!fano_ok)
            res.details.push_back("h1 is NOT the sum of two Fano matroids drawn from O(124) (" +
                                  std::to_string(planes.size()) + " planes found)");
        ok = ok && fano_ok;
    }
    res.pass = ok;
    return res;
}

// --- 5 ---------------------------------------------------------------------

CriterionResult non_entropic(Fixtures& fx)
{
    CriterionResult res = start(5, "Zhang-Yeung certificates for the non-entropic rays");
    bool ok = true;
    for (const char* name : {"h2_s3wr2c2", "h3_s2wr3s3", "h3_s1xpsl2_5", "h4_pgl3_2"}) {
        const auto [h, e] = fx.rank_function(name);
        const auto s = fx.structure_of(e.at("group").get<std::string>());
        // The function must lie on an extreme ray of its cone.
        const auto v = double_description(build_hrep(s));
        const auto coords = collapse(s, h);
        bool on_ray = false;
        for (const auto& r : v.rays) {
            if (sgn(r.back()) == 0)
                continue;
            const Rational c = coords.back() / Rational(r.back());
            bool same = sgn(c) > 0;
            for (std::size_t k = 0; k < r.size() && same; ++k)
                same = coords[k] == c * Rational(r[k]);
            on_ray = on_ray || same;
        }
        const Mask x = mask_or_empty(e.at("zy").at("contract").get<std::string>());
        const Mask y = parse_mask(e.at("zy").at("restrict").get<std::string>());
        const auto cert = zy_minor(h, x, y);
        const auto search = zy_violation_search(h);
        const bool good = on_ray && sgn(cert.value) < 0 && search && sgn(search->value) < 0;
        ok = ok && good;
        res.details.push_back(std::string(name) + ": extreme ray " + (on_ray ? "yes" : "NO") + "; given minor: " +
                              describe(cert) + "; search: " + (search ? describe(*search) : "no violation"));
    }
    {
        const auto [h, e] = fx.rank_function("h2_s3wr2c2_minor");
        std::array<int, 4> roles{};
        for (int k = 0; k < 4; ++k)
            roles[k] = e.at("zy_roles")[k].get<int>();
        const Rational v = zy_value(h, roles);
        const bool good = v == Rational(e.at("zy_value").get<long>());
        ok = ok && good;
        res.details.push_back("reduced 4-point function, roles (" + std::to_string(roles[0]) + "," +
                              std::to_string(roles[1]) + "," + std::to_string(roles[2]) + "," + std::to_string(roles[3]) +
                              "): ZY value " + v.get_str() + (good ? "" : " -- expected -1"));
    }
    res.pass = ok;
    return res;
}

// --- 6 ---------------------------------------------------------------------

CriterionResult counting()
{
    CriterionResult res = start(6, "subgroup classes and orbit-structure classes");
    bool ok = true;
    for (auto [n, want_groups, want_classes] : {std::tuple{6, 56, 35}, std::tuple{7, 96, 51}}) {
        const auto cls = enumerate_subgroup_classes(n);
        const auto p = build_poset(cls.representatives);
        const bool good = cls.complete && static_cast<int>(cls.representatives.size()) == want_groups &&
                          static_cast<int>(p.size()) == want_classes;
        ok = ok && good;
        res.details.push_back("S" + std::to_string(n) + ": " + std::to_string(cls.representatives.size()) +
                              " conjugacy classes of subgroups, " + std::to_string(p.size()) +
                              " orbit-structure classes, " + std::to_string(p.hasse_edges.size()) + " Hasse edges" +
                              (good ? "" : " -- expected " + std::to_string(want_groups) + " and " +
                                               std::to_string(want_classes)));
    }
    res.pass = ok;
    return res;
}

// --- 7 ---------------------------------------------------------------------

CriterionResult classification(const AcceptanceOptions& opt)
{
    CriterionResult res = start(7, "end-to-end classification of degrees 6 and 7");
    bool ok = true;
    ClassifyOptions co;
    co.mode = opt.enumerate_subgroups ? ClassifyMode::Enumerate : ClassifyMode::Catalog;
    for (int n : {6, 7}) {
        const auto r = classify_degree(n, co);
        std::string line = "degree " + std::to_string(n) + ": " + std::to_string(r.poset.size()) + " classes, " +
                           std::to_string(r.tight_classes().size()) + " Tight, " + std::to_string(r.unknown.size()) +
                           " Unknown";
        res.details.push_back(line);
        std::string tight = "    Tight:";
        for (int c : r.tight_classes())
            tight += " " + r.poset.display_name(c);
        res.details.push_back(tight);
        bool tight_ok = true;
        for (const auto& m : r.fixture.mismatches)
            if (m.rfind("tight:", 0) == 0)
                tight_ok = false;
        res.details.push_back(std::string("    Tight classes equal the expected list: ") + (tight_ok ? "yes" : "NO"));
        for (const auto& m : r.fixture.mismatches)
            res.details.push_back("    mismatch: " + m);
        for (const auto& m : r.fixture.notes)
            res.details.push_back("    note: " + m);
        ok = ok && r.complete() && r.fixture.ok();
    }
    res.pass = ok;
    return res;
}

// --- 8 ---------------------------------------------------------------------

Mask random_subset(int n, std::mt19937& rng, Mask within)
{
    Mask out = 0;
    for (int i = 0; i < n; ++i)
        if ((within >> i & 1) && (rng() & 1))
            out |= point_bit(i + 1);
    return out;
}

CriterionResult properties(const AcceptanceOptions& opt, Fixtures& fx)
{
    CriterionResult res = start(8, "property suites on randomized instances");
    std::mt19937 rng(opt.seed);
    const int count = opt.property_instances;
    bool ok = true;
    auto report = [&](const std::string& name, int passed, int total) {
        res.details.push_back(name + ": " + std::to_string(passed) + "/" + std::to_string(total));
        ok = ok && passed == total && total >= count;
    };

    {
        int passed = 0;
        for (int t = 0; t < count; ++t) {
            const int n = 3 + static_cast<int>(rng() % 4);
            const auto h = random_polymatroid(n, rng);
            const Mask x = random_subset(n, rng, full_mask(n));
            const Mask y = random_subset(n, rng, full_mask(n) & ~x);
            const Mask z = random_subset(n, rng, full_mask(n) & ~(x | y));
            const Mask rest = full_mask(n) & ~x;
            // contract then restrict == restrict then contract (labels renumbered after each step)
            const bool a = restrict(contract(h, x), compress(y | z, rest)) ==
                               contract(restrict(h, x | y | z), compress(x, x | y | z)) &&
                           minor(h, x, y | z) == restrict(contract(h, x), compress(y | z, rest));
            // contracting x then y == contracting x and y at once
            const bool b = contract(contract(h, x), compress(y, rest)) == contract(h, x | y);
            passed += a && b;
        }
        report("minor commutation", passed, count);
    }
    {
        int passed = 0;
        for (int t = 0; t < count; ++t) {
            const int n = 2 + static_cast<int>(rng() % 5);
            const auto h = random_polymatroid(n, rng), g = random_polymatroid(n, rng);
            const Mask x = random_subset(n, rng, full_mask(n));
            const Mask y = random_subset(n, rng, full_mask(n) & ~x);
            const int extra = 1 + static_cast<int>(rng() % 2);
            std::vector<int> pts(n + extra);
            std::iota(pts.begin(), pts.end(), 1);
            std::shuffle(pts.begin(), pts.end(), rng);
            Mask loops = 0;
            for (int k = 0; k < extra; ++k)
                loops |= point_bit(pts[k]);
            bool good = is_polymatroid(h) && is_polymatroid(sum(h, g)) && is_polymatroid(scale(h, Rational(3, 2)));
            if (y)
                good = good && is_polymatroid(minor(h, x, y));
            good = good && is_polymatroid(add_loops(h, loops, n + extra));
            passed += good;
        }
        report("polymatroid closure under minors, loops, sums", passed, count);
    }
    {
        // DD order invariance: 3 shuffles of each fixture cone, then random small cones.
        std::vector<HRep> pool;
        for (auto& c : fx.cones())
            pool.push_back(c.hrep);
        std::vector<HRep> small;
        for (int n = 4; n <= 6; ++n)
            for (const auto& pc : named_poset(n, ClassifyMode::Catalog).classes)
                if (pc.structure.dimension() <= 12)
                    small.push_back(build_hrep(pc.structure));
        int passed = 0, total = 0;
        auto check = [&](const HRep& h) {
            const auto base = double_description(h);
            std::vector<int> order(h.rows.size());
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            DDOptions o;
            o.insertion_order = order;
            ++total;
            passed += double_description(h, o).rays == base.rays;
        };
        for (const auto& h : pool)
            for (int k = 0; k < 3; ++k)
                check(h);
        while (total < count)
            check(small[rng() % small.size()]);
        report("DD insertion-order invariance", passed, total);
    }
    {
        int passed = 0;
        for (int t = 0; t < count; ++t) {
            const auto h = random_polymatroid(4, rng);
            std::array<int, 4> roles{1, 2, 3, 4};
            std::shuffle(roles.begin(), roles.end(), rng);
            auto swapped = roles;
            std::swap(swapped[2], swapped[3]);
            passed += zy_value(h, roles) == zy_value(h, swapped);
        }
        report("Zhang-Yeung symmetry in roles 3 and 4", passed, count);
    }
    {
        int passed = 0;
        for (int t = 0; t < count; ++t) {
            const int n = 4 + static_cast<int>(rng() % 3);
            const int p = std::array<int, 4>{2, 3, 5, 7}[rng() % 4];
            const int width = 1 + static_cast<int>(rng() % 2);
            const int rows = 2 + static_cast<int>(rng() % (n * width - 1));
            const auto m = random_matrix(n, rows, width, p, rng);
            passed += !zy_violation_search(rank_function(m)).has_value();
        }
        report("representable functions have no Zhang-Yeung certificate", passed, count);
    }
    res.pass = ok;
    return res;
}

}  // namespace

GFMatrix random_matrix(int n, int rows, int width, int p, std::mt19937& rng)
{
    GFMatrix m;
    m.p = p;
    m.rows = rows;
    m.cols = n * width;
    m.entries.resize(static_cast<std::size_t>(rows) * m.cols);
    for (auto& e : m.entries)
        e = static_cast<int>(rng() % p);
    for (int i = 0; i < n; ++i) {
        m.blocks.emplace_back();
        for (int c = 0; c < width; ++c)
            m.blocks.back().push_back(i * width + c);
    }
    return m;
}

RankFunction random_polymatroid(int n, std::mt19937& rng)
{
    RankFunction h(n);
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        const int width = 1 + static_cast<int>(rng() % 2);
        const int rows = 1 + static_cast<int>(rng() % (n * width));
        const auto m = random_matrix(n, rows, width, 2 + static_cast<int>(rng() % 2), rng);
        h = sum(h, scale(rank_function(m), Rational(1 + static_cast<int>(rng() % 3))));
    }
    return h;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt)
{
    Fixtures fx;
    std::vector<CriterionResult> out;
    const std::vector<std::pair<int, std::function<CriterionResult()>>> all = {
        {1, [&] { return cone_fixtures(fx); }},
        {2, [&] { return ray_fixtures(fx); }},
        {3, [&] { return oracle_equivalence(fx); }},
        {4, [&] { return representations(fx); }},
        {5, [&] { return non_entropic(fx); }},
        {6, [&] { return counting(); }},
        {7, [&] { return classification(opt); }},
        {8, [&] { return properties(opt, fx); }},
    };
    for (const auto& [id, run] : all) {
        if (!opt.only.empty() && !opt.only.count(id))
            continue;
        const auto start = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = run();
        } catch (const std::exception& e) {
            r.id = id;
            r.title = "criterion " + std::to_string(id);
            r.pass = false;
            r.details.push_back(std::string("error: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_results(const std::vector<CriterionResult>& results, bool verbose)
{
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.title << "\n";
        if (verbose || !r.pass)
            for (const auto& d : r.details)
                os << "    " << d << "\n";
    }
    return os.str();
}

}  // namespace symcone
