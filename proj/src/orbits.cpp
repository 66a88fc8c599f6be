#include "symcone/orbits.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace symcone {

namespace {

const std::vector<Permutation>& cached_permutations(int n)
{
    static std::mutex mutex;
    static std::map<int, std::vector<Permutation>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, all_permutations(n)).first;
    return it->second;
}

void check_search_degree(int n)
{
    if (n > 8)
        throw std::invalid_argument("orbit structure search over S_n limited to n <= 8");
}

std::vector<Mask> mask_images(const Permutation& sigma, int n)
{
    std::vector<Mask> img(std::size_t{1} << n);
    for (Mask m = 0; m < img.size(); ++m)
        img[m] = sigma.apply(m);
    return img;
}

void fill_order(OrbitStructure& s)
{
    const int d = s.dimension();
    s.order.assign(d, std::vector<bool>(d, false));
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            bool all = true;
            for (Mask x : s.orbits[a]) {
                bool found = false;
                for (Mask y : s.orbits[b]) {
                    if ((x & y) == x) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    all = false;
                    break;
                }
            }
            s.order[a][b] = all;
        }
    }
}

}  // namespace

std::vector<std::vector<int>> OrbitStructure::profile() const
{
    std::vector<std::vector<int>> out(n + 1);
    for (const auto& o : orbits)
        out[cardinality(o.front())].push_back(static_cast<int>(o.size()));
    for (auto& v : out)
        std::sort(v.begin(), v.end());
    return out;
}

OrbitStructure structure_from_partition(int n, const std::vector<std::vector<Mask>>& parts)
{
    if (n < 1 || n > kMaxDegree)
        throw std::invalid_argument("orbit structure degree out of range");
    OrbitStructure s;
    s.n = n;
    const Mask total = Mask{1} << n;
    s.orbits = parts;
    for (auto& o : s.orbits)
        std::sort(o.begin(), o.end(), mask_canonical_less);
    std::sort(s.orbits.begin(), s.orbits.end(),
              [](const auto& a, const auto& b) { return mask_canonical_less(a.front(), b.front()); });
    s.orbit_of.assign(total, -2);
    s.orbit_of[0] = -1;
    for (int k = 0; k < s.dimension(); ++k) {
        for (Mask m : s.orbits[k]) {
            if (m == 0 || m >= total || s.orbit_of[m] != -2)
                throw std::invalid_argument("orbit partition is not a partition of the nonempty subsets");
            s.orbit_of[m] = k;
        }
    }
    for (Mask m = 1; m < total; ++m)
        if (s.orbit_of[m] == -2)
            throw std::invalid_argument("orbit partition misses subset " + mask_to_string(m));
    fill_order(s);
    return s;
}

OrbitStructure orbit_structure(int n, const std::vector<Permutation>& generators)
{
    for (const auto& g : generators)
        if (g.degree() != n)
            throw std::invalid_argument("orbit_structure: generator degree mismatch");
    const Mask total = Mask{1} << n;
    std::vector<bool> visited(total, false);
    std::vector<std::vector<Mask>> parts;
    for (Mask start = 1; start < total; ++start) {
        if (visited[start])
            continue;
        std::vector<Mask> orbit{start};
        visited[start] = true;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            for (const auto& g : generators) {
                const Mask next = g.apply(orbit[head]);
                if (!visited[next]) {
                    visited[next] = true;
                    orbit.push_back(next);
                }
            }
        }
        parts.push_back(std::move(orbit));
    }
    return structure_from_partition(n, parts);
}

OrbitStructure orbit_structure(const PermGroup& g)
{
    return orbit_structure(g.degree, g.generators);
}

OrbitStructure relabel(const OrbitStructure& s, const Permutation& sigma)
{
    if (sigma.degree() != s.n)
        throw std::invalid_argument("relabel: degree mismatch");
    std::vector<std::vector<Mask>> parts;
    parts.reserve(s.orbits.size());
    for (const auto& o : s.orbits) {
        std::vector<Mask> image;
        image.reserve(o.size());
        for (Mask m : o)
            image.push_back(sigma.apply(m));
        parts.push_back(std::move(image));
    }
    return structure_from_partition(s.n, parts);
}

bool refines(const OrbitStructure& finer, const OrbitStructure& coarser)
{
    if (finer.n != coarser.n)
        throw std::invalid_argument("refines: degree mismatch");
    for (const auto& o : finer.orbits) {
        const int target = coarser.orbit_of[o.front()];
        for (Mask m : o)
            if (coarser.orbit_of[m] != target)
                return false;
    }
    return true;
}

CanonicalForm canonical_form(const OrbitStructure& s)
{
    check_search_degree(s.n);
    const auto& perms = cached_permutations(s.n);
    const std::size_t total = std::size_t{1} << s.n;
    CanonicalForm best;
    std::vector<Mask> code(total);
    for (const auto& sigma : perms) {
        const auto img = mask_images(sigma, s.n);
        code[0] = 0;
        for (const auto& o : s.orbits) {
            Mask least = img[o.front()];
            for (Mask m : o)
                least = std::min(least, img[m]);
            for (Mask m : o)
                code[img[m]] = least;
        }
        if (best.code.empty() || code < best.code) {
            best.code = code;
            best.witness = sigma;
        }
    }
    return best;
}

std::optional<Permutation> structures_isomorphic(const OrbitStructure& a, const OrbitStructure& b)
{
    if (a.n != b.n)
        throw std::invalid_argument("structures_isomorphic: degree mismatch");
    if (a.profile() != b.profile())
        return std::nullopt;
    if (a == b)
        return Permutation::identity(a.n);
    const auto ca = canonical_form(a);
    const auto cb = canonical_form(b);
    if (ca.code != cb.code)
        return std::nullopt;
    return cb.witness.inverse() * ca.witness;
}

std::optional<Permutation> refines_up_to_relabeling(const OrbitStructure& finer, const OrbitStructure& coarser)
{
    if (finer.n != coarser.n)
        throw std::invalid_argument("refines_up_to_relabeling: degree mismatch");
    check_search_degree(finer.n);
    // A refinement has at least as many orbits in every cardinality.
    const auto pf = finer.profile();
    const auto pc = coarser.profile();
    for (int k = 0; k <= finer.n; ++k)
        if (pf[k].size() < pc[k].size())
            return std::nullopt;

    for (const auto& sigma : cached_permutations(finer.n)) {
        bool ok = true;
        for (const auto& o : finer.orbits) {
            const int target = coarser.orbit_of[sigma.apply(o.front())];
            for (std::size_t i = 1; i < o.size(); ++i) {
                if (coarser.orbit_of[sigma.apply(o[i])] != target) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                break;
        }
        if (ok)
            return sigma;
    }
    return std::nullopt;
}

std::optional<int> StructurePoset::class_of(const OrbitStructure& s) const
{
    if (s.n != degree)
        return std::nullopt;
    auto it = index.find(canonical_form(s).code);
    if (it == index.end())
        return std::nullopt;
    return it->second;
}

std::string StructurePoset::display_name(int i) const
{
    const auto& c = classes.at(i);
    if (c.names.empty())
        return c.id;
    std::string out = c.id + " [";
    for (std::size_t k = 0; k < c.names.size(); ++k) {
        if (k)
            out += ", ";
        out += c.names[k];
    }
    return out + "]";
}

StructurePoset build_poset(const std::vector<PermGroup>& reps)
{
    StructurePoset p;
    if (reps.empty())
        return p;
    p.degree = reps.front().degree;

    struct Entry {
        std::vector<Mask> code;
        OrbitStructure canonical;
        std::vector<std::size_t> members;
    };
    std::map<std::vector<Mask>, Entry> buckets;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (reps[i].degree != p.degree)
            throw std::invalid_argument("build_poset: groups of mixed degree");
        const auto s = orbit_structure(reps[i]);
        auto cf = canonical_form(s);
        auto it = buckets.find(cf.code);
        if (it == buckets.end())
            it = buckets.emplace(cf.code, Entry{cf.code, relabel(s, cf.witness), {}}).first;
        it->second.members.push_back(i);
    }

    std::vector<Entry> entries;
    for (auto& [code, e] : buckets)
        entries.push_back(std::move(e));
    // Coarsest classes first; ties broken by canonical code.
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.canonical.dimension() < b.canonical.dimension();
    });

    const int width = entries.size() >= 10 ? 2 : 1;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        PosetClass c;
        std::ostringstream id;
        id << "P" << p.degree << "." << std::string(width - std::to_string(k + 1).size(), '0') << (k + 1);
        c.id = id.str();
        c.structure = std::move(entries[k].canonical);
        c.members = std::move(entries[k].members);
        for (auto m : c.members)
            if (!reps[m].name.empty())
                c.names.push_back(reps[m].name);
        p.index.emplace(entries[k].code, static_cast<int>(k));
        p.classes.push_back(std::move(c));
    }

    const int size = static_cast<int>(p.classes.size());
    p.leq.assign(size, std::vector<bool>(size, false));
    for (int i = 0; i < size; ++i) {
        p.leq[i][i] = true;
        for (int j = 0; j < size; ++j) {
            if (i == j || p.classes[i].structure.dimension() <= p.classes[j].structure.dimension())
                continue;
            p.leq[i][j] = refines_up_to_relabeling(p.classes[i].structure, p.classes[j].structure).has_value();
        }
    }
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            if (!p.less(i, j))
                continue;
            bool covered = true;
            for (int k = 0; k < size && covered; ++k)
                if (p.less(i, k) && p.less(k, j))
                    covered = false;
            if (covered)
                p.hasse_edges.emplace_back(i, j);
        }
    }
    return p;
}

std::string hasse_dot(const StructurePoset& p, const std::map<int, std::string>& fill)
{
    std::ostringstream out;
    out << "digraph P" << p.degree << " {\n";
    out << "  rankdir=BT;\n";
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
        std::string label = p.classes[i].id;
        for (const auto& name : p.classes[i].names)
            label += "\\n" + name;
        out << "  \"" << p.classes[i].id << "\" [label=\"" << label << "\"";
        if (auto it = fill.find(i); it != fill.end())
            out << ", style=filled, fillcolor=" << it->second;
        out << "];\n";
    }
    for (const auto& [a, b] : p.hasse_edges)
        out << "  \"" << p.classes[a].id << "\" -> \"" << p.classes[b].id << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace symcone
