#include "symcone/classifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "symcone/io.hpp"
#include "symcone/polymatroid.hpp"
#include "symcone/shannon_cone.hpp"

namespace symcone {

std::string to_string(Tightness t)
{
    switch (t) {
    case Tightness::Tight:
        return "Tight";
    case Tightness::NotTight:
        return "NotTight";
    default:
        return "Unknown";
    }
}

// --- reference structures --------------------------------------------------

OrbitStructure young_structure(const std::vector<int>& partition)
{
    int n = 0;
    std::vector<int> block;
    for (std::size_t b = 0; b < partition.size(); ++b) {
        if (partition[b] <= 0)
            throw std::invalid_argument("young_structure: parts must be positive");
        for (int k = 0; k < partition[b]; ++k)
            block.push_back(static_cast<int>(b));
        n += partition[b];
    }
    if (n < 1 || n > kMaxDegree)
        throw std::invalid_argument("young_structure: bad degree");
    std::map<std::vector<int>, std::vector<Mask>> parts;
    for (Mask a = 1; a <= full_mask(n); ++a) {
        std::vector<int> counts(partition.size(), 0);
        for (int i = 0; i < n; ++i)
            if (a >> i & 1)
                ++counts[block[i]];
        parts[counts].push_back(a);
    }
    std::vector<std::vector<Mask>> list;
    for (auto& [k, v] : parts)
        list.push_back(std::move(v));
    return structure_from_partition(n, list);
}

OrbitStructure cyclic_structure(int n)
{
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i)
        images[i] = (i + 1) % n + 1;
    return orbit_structure(n, {Permutation(n, images)});
}

OrbitStructure dihedral_structure(int n)
{
    std::vector<int> rot(n), ref(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n + 1;
        ref[i] = n - i;
    }
    return orbit_structure(n, {Permutation(n, rot), Permutation(n, ref)});
}

OrbitStructure with_fixed_point(const OrbitStructure& s)
{
    const int n = s.n + 1;
    std::map<std::pair<int, int>, std::vector<Mask>> parts;
    for (Mask a = 1; a <= full_mask(n); ++a) {
        const Mask rest = a >> 1;
        parts[{static_cast<int>(a & 1), rest ? s.orbit_of[rest] : -1}].push_back(a);
    }
    std::vector<std::vector<Mask>> list;
    for (auto& [k, v] : parts)
        list.push_back(std::move(v));
    return structure_from_partition(n, list);
}

std::vector<std::vector<int>> integer_partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int cap) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(left, cap); k >= 1; --k) {
            cur.push_back(k);
            self(self, left - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// --- statuses --------------------------------------------------------------

namespace {

std::string chain(const StructurePoset& p, const Statuses& st, int cls)
{
    std::string out = p.display_name(cls);
    std::set<int> seen{cls};
    int cur = cls;
    while (true) {
        const auto& prov = st[cur].provenance;
        if (prov.empty()) {
            out += " <- (no provenance)";
            break;
        }
        out += " <- " + prov.front().text();
        if (prov.front().from < 0 || !seen.insert(prov.front().from).second)
            break;
        cur = prov.front().from;
    }
    return out;
}

std::string partition_name(const std::vector<int>& part)
{
    std::string out;
    for (int k : part)
        out += (out.empty() ? "S" : "xS") + std::to_string(k);
    return out;
}

}  // namespace

void assign(Statuses& st, const StructurePoset& p, int cls, Tightness value, Justification why)
{
    auto& s = st.at(cls);
    if (s.value == Tightness::Unknown) {
        s.value = value;
        s.provenance.push_back(std::move(why));
        return;
    }
    if (s.value == value) {
        s.provenance.push_back(std::move(why));
        return;
    }
    std::string msg = "contradiction at " + p.display_name(cls) + ": " + to_string(s.value) + " via " +
                      chain(p, st, cls) + "; " + to_string(value) + " via " + why.text();
    if (why.from >= 0)
        msg += " <- " + chain(p, st, why.from);
    throw ClassificationContradiction(msg);
}

Statuses seed_known(const StructurePoset& p,
                    const StructurePoset* lower,
                    const Statuses* lower_status,
                    std::vector<std::string>* flags)
{
    Statuses st(p.size());
    const int n = p.degree;
    auto flag = [&](std::string s) {
        if (flags)
            flags->push_back(std::move(s));
    };

    if (n <= 3) {
        for (int c = 0; c < static_cast<int>(p.size()); ++c)
            assign(st, p, c, Tightness::Tight, {"degree <= 3", "closure of entropic region equals Gamma_n"});
        return st;
    }

    // Structural matching is exact; disagreeing patterns on one class throw in assign().
    auto apply = [&](const OrbitStructure& s, Tightness value, Justification why, const std::string& pattern) {
        auto c = p.class_of(s);
        if (!c) {
            flag(pattern + ": no class with this orbit structure");
            return;
        }
        assign(st, p, *c, value, std::move(why));
    };

    for (const auto& part : integer_partitions(n)) {
        const bool tight = part.size() == 1 || (part.size() == 2 && part[1] == 1);
        const std::string name = partition_name(part);
        apply(young_structure(part), tight ? Tightness::Tight : Tightness::NotTight, {"Theorem 1", "Young subgroup " + name},
              name);
    }
    if (n >= 6) {
        apply(cyclic_structure(n), Tightness::NotTight, {"Theorem 3", "C" + std::to_string(n)}, "C" + std::to_string(n));
        apply(dihedral_structure(n), Tightness::NotTight, {"Theorem 3", "D" + std::to_string(n)}, "D" + std::to_string(n));
        apply(with_fixed_point(cyclic_structure(n - 1)), Tightness::NotTight, {"Theorem 3", "S1xC" + std::to_string(n - 1)},
              "S1xC" + std::to_string(n - 1));
        apply(with_fixed_point(dihedral_structure(n - 1)), Tightness::NotTight,
              {"Theorem 3", "S1xD" + std::to_string(n - 1)}, "S1xD" + std::to_string(n - 1));
    }
    if (lower && lower_status) {
        if (lower->degree != n - 1)
            throw std::invalid_argument("seed_known: lower poset must have degree n-1");
        for (int c = 0; c < static_cast<int>(lower->size()); ++c) {
            if ((*lower_status)[c].value != Tightness::NotTight)
                continue;
            const std::string factor = lower->display_name(c);
            apply(with_fixed_point(lower->classes[c].structure), Tightness::NotTight, {"Lemma 2", "from factor " + factor},
                  "S1 x " + factor);
        }
    }
    return st;
}

void propagate(const StructurePoset& p, Statuses& st)
{
    const int size = static_cast<int>(p.size());
    if (static_cast<int>(st.size()) != size)
        throw std::invalid_argument("propagate: status vector size mismatch");
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < size; ++i) {
            for (int j = 0; j < size; ++j) {
                if (!p.less(i, j))
                    continue;
                // i refines j
                if (st[i].value == Tightness::Tight && st[j].value != Tightness::Tight) {
                    assign(st, p, j, Tightness::Tight, {"Theorem 2", "from class " + p.classes[i].id, i});
                    changed = true;
                }
                if (st[j].value == Tightness::NotTight && st[i].value != Tightness::NotTight) {
                    assign(st, p, i, Tightness::NotTight, {"Theorem 2", "from class " + p.classes[j].id, j});
                    changed = true;
                }
            }
        }
    }
}

CriticalSets critical_classes(const StructurePoset& p, const Statuses& st)
{
    CriticalSets out;
    const int size = static_cast<int>(p.size());
    for (int i = 0; i < size; ++i) {
        bool minimal = st[i].value == Tightness::Tight, maximal = st[i].value == Tightness::NotTight;
        for (int j = 0; j < size; ++j) {
            if (minimal && p.less(j, i) && st[j].value == Tightness::Tight)
                minimal = false;
            if (maximal && p.less(i, j) && st[j].value == Tightness::NotTight)
                maximal = false;
        }
        if (minimal)
            out.minimal_tight.push_back(i);
        if (maximal)
            out.maximal_not_tight.push_back(i);
    }
    return out;
}

// --- certificates ----------------------------------------------------------

std::vector<GFMatrix> derived_evidence(const OrbitStructure& s)
{
    std::vector<GFMatrix> out;
    if (s.n != 7)
        return out;
    for (int k = 0; k < s.dimension(); ++k) {
        if (cardinality(s.label(k)) != 3)
            continue;
        const auto planes = fano_planes_within(s.orbits[k]);
        std::vector<GFMatrix> reps;
        for (const auto& lines : planes) {
            auto m = fano_representation(lines);
            if (!m)
                continue;
            std::string tag;
            for (Mask l : lines)
                tag += (tag.empty() ? "" : " ") + mask_label(l);
            m->name = "Fano[" + tag + "]";
            reps.push_back(*m);
        }
        for (const auto& m : reps) {
            out.push_back(m);
            out.push_back(dual_representation(m));
        }
        for (std::size_t a = 0; a < planes.size(); ++a) {
            for (std::size_t b = a + 1; b < planes.size(); ++b) {
                std::vector<Mask> both = planes[a];
                both.insert(both.end(), planes[b].begin(), planes[b].end());
                std::sort(both.begin(), both.end());
                if (std::adjacent_find(both.begin(), both.end()) != both.end())
                    continue;
                auto sum_ = direct_sum(reps[a], reps[b]);
                sum_.name = reps[a].name + "+" + reps[b].name;
                out.push_back(sum_);
                auto dual_sum = direct_sum(dual_representation(reps[a]), dual_representation(reps[b]));
                dual_sum.name = reps[a].name + "*+" + reps[b].name + "*";
                out.push_back(dual_sum);
            }
        }
    }
    return out;
}

ClassCertificate certify_class(const OrbitStructure& s, const std::vector<GFMatrix>& evidence, bool stop_early,
                               std::uint64_t search_budget)
{
    ClassCertificate c;
    c.vrep = double_description(build_hrep(s));
    std::vector<GFMatrix> usable;
    for (const auto& m : evidence)
        if (m.degree() == s.n)
            usable.push_back(m);
    for (const auto& m : derived_evidence(s))
        usable.push_back(m);

    std::map<std::string, int> reasons;
    bool all = true;
    for (const auto& ray : c.vrep.rays) {
        c.rays.push_back(certify_ray(s, ray, usable));
        if (c.rays.back().kind == RayStatusKind::Unknown) {
            // Last resort: build a representation from a cyclic symmetry of the ray.
            if (auto m = search_cyclic_representation(expand(s, ray), search_budget)) {
                usable.push_back(*m);
                c.rays.back() = certify_ray(s, ray, {*m});
            }
        }
        const auto& r = c.rays.back();
        if (r.kind == RayStatusKind::NonEntropic) {
            if (c.value != Tightness::NotTight) {
                c.value = Tightness::NotTight;
                c.summary = "ray (" + to_string(ray) + ") is not entropic: " + r.reason;
            }
            if (stop_early)
                return c;
            continue;
        }
        if (r.kind == RayStatusKind::Unknown)
            all = false;
        else
            ++reasons[r.reason.rfind("uniform", 0) == 0 ? "uniform" : r.reason];
    }
    if (c.value == Tightness::NotTight)
        return c;
    std::ostringstream os;
    os << c.vrep.rays.size() << " extreme rays";
    if (all) {
        c.value = Tightness::Tight;
        os << ", all almost entropic (";
        bool first = true;
        for (const auto& [why, count] : reasons) {
            os << (first ? "" : "; ") << count << " " << why;
            first = false;
        }
        os << ")";
    } else {
        int open = 0;
        for (const auto& r : c.rays)
            open += r.kind == RayStatusKind::Unknown;
        os << ", " << open << " without certificate";
    }
    c.summary = os.str();
    return c;
}

// --- classification --------------------------------------------------------

std::vector<PermGroup> class_representatives(int n, ClassifyMode mode)
{
    if (mode == ClassifyMode::Enumerate) {
        auto classes = enumerate_subgroup_classes(n);
        if (!classes.complete)
            throw std::runtime_error("subgroup enumeration incomplete");
        for (auto& g : classes.representatives)
            g.name.clear();
        return classes.representatives;
    }
    const auto path = data_dir() / "subgroups" / ("degree" + std::to_string(n) + ".json");
    const json j = read_json(path);
    if (j.at("degree").get<int>() != n)
        throw std::runtime_error(path.string() + ": degree mismatch");
    std::vector<PermGroup> out;
    for (const auto& gens : j.at("classes")) {
        std::string text;
        for (const auto& g : gens)
            text += (text.empty() ? "" : ",") + g.get<std::string>();
        out.push_back(group_from_string(text, n));
    }
    return out;
}

StructurePoset named_poset(int n, ClassifyMode mode)
{
    auto p = build_poset(class_representatives(n, mode));
    for (const auto& e : load_group_catalog(data_dir() / "groups.json")) {
        if (e.degree != n || !e.group)
            continue;
        if (auto c = p.class_of(*e.group)) {
            auto& names = p.classes[*c].names;
            if (std::find(names.begin(), names.end(), e.name) == names.end())
                names.push_back(e.name);
        }
    }
    return p;
}

std::vector<int> ClassificationReport::tight_classes() const
{
    std::vector<int> out;
    for (int c = 0; c < static_cast<int>(status.size()); ++c)
        if (status[c].value == Tightness::Tight)
            out.push_back(c);
    return out;
}

ClassificationReport classify_degree(int n, const ClassifyOptions& opt)
{
    if (n < 1 || n > 7)
        throw std::invalid_argument("classify_degree: degree must be in 1..7");
    ClassificationReport r;
    r.degree = n;
    r.poset = named_poset(n, opt.mode);

    std::vector<GFMatrix> evidence = opt.evidence;
    if (evidence.empty() && opt.load_shipped_evidence)
        evidence = load_matrices(data_dir() / "certificates");

    // Lemma 2 needs the NotTight classes one degree down.
    std::optional<ClassificationReport> lower;
    if (n >= 5) {
        ClassifyOptions sub = opt;
        sub.evidence = evidence;
        lower = classify_degree(n - 1, sub);
    }
    r.status = seed_known(r.poset, lower ? &lower->poset : nullptr, lower ? &lower->status : nullptr, &r.flags);

    std::set<int> attempted;
    while (true) {
        propagate(r.poset, r.status);
        int pick = -1;
        for (int c = 0; c < static_cast<int>(r.poset.size()); ++c) {
            if (r.status[c].value != Tightness::Unknown || attempted.count(c))
                continue;
            const int d = r.poset.classes[c].structure.dimension();
            if (d > opt.max_certify_dimension)
                continue;
            if (pick < 0 || d < r.poset.classes[pick].structure.dimension())
                pick = c;
        }
        if (pick < 0)
            break;
        attempted.insert(pick);
        CertificationRecord rec{pick, certify_class(r.poset.classes[pick].structure, evidence)};
        if (rec.certificate.value != Tightness::Unknown)
            assign(r.status, r.poset, pick, rec.certificate.value, {"certificate", rec.certificate.summary});
        else
            r.flags.push_back(r.poset.classes[pick].id + ": certificate inconclusive (" + rec.certificate.summary + ")");
        r.certified.push_back(std::move(rec));
    }

    for (int c = 0; c < static_cast<int>(r.poset.size()); ++c)
        if (r.status[c].value == Tightness::Unknown)
            r.unknown.push_back(c);
    r.critical = critical_classes(r.poset, r.status);
    r.fixture = compare_with_fixture(r);
    return r;
}

FixtureComparison compare_with_fixture(const ClassificationReport& r)
{
    FixtureComparison out;
    const json fx = read_json(data_dir() / "fixtures" / "classification.json");
    const std::string key = std::to_string(r.degree);
    if (!fx.contains(key))
        return out;
    out.available = true;
    const auto catalog = load_group_catalog(data_dir() / "groups.json");
    const auto& p = r.poset;

    auto resolve = [&](const json& families, const std::string& what) {
        std::set<int> classes;
        for (const auto& family : families) {
            std::set<int> hit;
            for (const auto& nm : family) {
                const std::string name = nm.get<std::string>();
                const auto* e = find_group(catalog, name);
                if (!e || !e->group) {
                    out.notes.push_back(what + ": " + name + " not usable" + (e && !e->note.empty() ? " (" + e->note + ")" : ""));
                    continue;
                }
                if (auto c = p.class_of(*e->group))
                    hit.insert(*c);
                else
                    out.mismatches.push_back(what + ": " + name + " has no class");
            }
            if (hit.size() > 1) {
                std::string s = what + ": family";
                for (const auto& nm : family)
                    s += " " + nm.get<std::string>();
                out.mismatches.push_back(s + " spans " + std::to_string(hit.size()) + " classes");
            }
            classes.insert(hit.begin(), hit.end());
        }
        return classes;
    };
    auto compare = [&](const std::string& what, const std::set<int>& expected, const std::vector<int>& got) {
        const std::set<int> have(got.begin(), got.end());
        for (int c : expected)
            if (!have.count(c))
                out.mismatches.push_back(what + ": expected " + p.display_name(c) + " (" + to_string(r.status[c].value) + ")");
        for (int c : have)
            if (!expected.count(c))
                out.mismatches.push_back(what + ": unexpected " + p.display_name(c));
    };
    const auto& f = fx.at(key);
    compare("tight", resolve(f.at("tight"), "tight"), r.tight_classes());
    compare("minimal tight", resolve(f.at("minimal_tight"), "minimal tight"), r.critical.minimal_tight);
    compare("maximal not tight", resolve(f.at("maximal_not_tight"), "maximal not tight"), r.critical.maximal_not_tight);
    return out;
}

// --- output ----------------------------------------------------------------

nlohmann::json ClassificationReport::to_json() const
{
    json j;
    j["degree"] = degree;
    j["complete"] = complete();
    j["classes"] = json::array();
    for (int c = 0; c < static_cast<int>(poset.size()); ++c) {
        const auto& pc = poset.classes[c];
        json e;
        e["id"] = pc.id;
        e["names"] = pc.names;
        e["dimension"] = pc.structure.dimension();
        e["orbits"] = orbit_labels(pc.structure);
        e["status"] = to_string(status[c].value);
        e["provenance"] = json::array();
        for (const auto& why : status[c].provenance)
            e["provenance"].push_back(why.text());
        j["classes"].push_back(e);
    }
    j["hasse_edges"] = json::array();
    for (const auto& [a, b] : poset.hasse_edges)
        j["hasse_edges"].push_back({poset.classes[a].id, poset.classes[b].id});
    auto ids = [&](const std::vector<int>& v) {
        json a = json::array();
        for (int c : v)
            a.push_back(poset.classes[c].id);
        return a;
    };
    j["minimal_tight"] = ids(critical.minimal_tight);
    j["maximal_not_tight"] = ids(critical.maximal_not_tight);
    j["unknown"] = ids(unknown);
    j["certificates"] = json::array();
    for (const auto& rec : certified) {
        json e;
        e["class"] = poset.classes[rec.cls].id;
        e["status"] = to_string(rec.certificate.value);
        e["summary"] = rec.certificate.summary;
        e["rays"] = json::array();
        for (std::size_t k = 0; k < rec.certificate.rays.size(); ++k)
            e["rays"].push_back({{"ray", to_string(rec.certificate.vrep.rays[k])},
                                 {"status", to_string(rec.certificate.rays[k].kind)},
                                 {"reason", rec.certificate.rays[k].reason}});
        j["certificates"].push_back(e);
    }
    j["flags"] = flags;
    j["fixture"] = {{"available", fixture.available},
                    {"ok", fixture.ok()},
                    {"mismatches", fixture.mismatches},
                    {"notes", fixture.notes}};
    return j;
}

std::string ClassificationReport::to_text() const
{
    std::ostringstream os;
    os << "degree " << degree << ": " << poset.size() << " classes, " << tight_classes().size() << " Tight, "
       << unknown.size() << " Unknown" << (complete() ? "" : " (INCOMPLETE)") << "\n";
    for (int c = 0; c < static_cast<int>(poset.size()); ++c) {
        os << "  " << poset.display_name(c) << "  dim " << poset.classes[c].structure.dimension() << "  "
           << to_string(status[c].value);
        if (!status[c].provenance.empty())
            os << "  [" << status[c].provenance.front().text() << "]";
        os << "\n";
    }
    os << "minimal Tight:\n";
    for (int c : critical.minimal_tight)
        os << "  " << poset.display_name(c) << "\n";
    os << "maximal NotTight:\n";
    for (int c : critical.maximal_not_tight)
        os << "  " << poset.display_name(c) << "\n";
    if (!unknown.empty()) {
        os << "unknown:\n";
        for (int c : unknown)
            os << "  " << poset.display_name(c) << "\n";
    }
    for (const auto& f : flags)
        os << "flag: " << f << "\n";
    if (fixture.available) {
        os << "fixture comparison: " << (fixture.ok() ? "match" : "MISMATCH") << "\n";
        for (const auto& m : fixture.mismatches)
            os << "  mismatch: " << m << "\n";
        for (const auto& m : fixture.notes)
            os << "  note: " << m << "\n";
    }
    return os.str();
}

std::string ClassificationReport::to_dot() const
{
    std::map<int, std::string> fill;
    for (int c = 0; c < static_cast<int>(status.size()); ++c) {
        if (status[c].value == Tightness::Tight)
            fill[c] = "green";
        else if (status[c].value == Tightness::NotTight)
            fill[c] = "red";
    }
    return hasse_dot(poset, fill);
}

}  // namespace symcone
