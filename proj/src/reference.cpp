#include "symcone/reference.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "symcone/io.hpp"
#include "symcone/linalg.hpp"

namespace symcone {

PermGroup ReferenceTable::group() const
{
    std::vector<Permutation> gens;
    for (const auto& g : generators)
        gens.push_back(parse_perm(g, degree));
    return group_closure(gens, name);
}

std::vector<ReferenceTable> load_reference_tables(const std::filesystem::path& path)
{
    std::vector<ReferenceTable> out;
    for (const auto& j : read_json(path)) {
        ReferenceTable t;
        t.name = j.at("name").get<std::string>();
        t.table = j.value("table", "");
        t.degree = j.at("degree").get<int>();
        t.generators = j.at("generators").get<std::vector<std::string>>();
        for (const auto& l : j.at("labels"))
            t.labels.push_back(parse_mask(l.get<std::string>()));
        t.hrep = j.at("hrep").get<std::vector<Row>>();
        t.uniform_ranks = j.value("uniform_ranks", std::vector<int>{});
        t.vrep = j.value("vrep", std::vector<Row>{});
        for (const auto& r : t.hrep)
            if (r.size() != t.labels.size())
                throw std::invalid_argument(t.name + ": H-row width differs from the label count");
        for (const auto& r : t.vrep)
            if (r.size() != t.labels.size())
                throw std::invalid_argument(t.name + ": V-row width differs from the label count");
        out.push_back(std::move(t));
    }
    return out;
}

ColumnMatch match_columns(const OrbitStructure& s, const std::vector<Mask>& labels, const Permutation& sigma)
{
    ColumnMatch m;
    const Permutation inv = sigma.inverse();
    std::vector<int> used(s.dimension(), 0);
    for (Mask l : labels) {
        const int k = (l == 0 || l > full_mask(s.n)) ? -1 : s.index_of(inv.apply(l));
        m.orbit_of_column.push_back(k);
        if (k >= 0)
            ++used[k];
    }
    for (int k = 0; k < s.dimension(); ++k)
        if (!used[k])
            m.uncovered.push_back(k);
    m.bijective = static_cast<int>(labels.size()) == s.dimension() &&
                  std::all_of(used.begin(), used.end(), [](int u) { return u == 1; });
    return m;
}

namespace {

// Computed row (orbit order) -> table column order.
Row to_columns(const Row& r, const ColumnMatch& m)
{
    Row out;
    for (int k : m.orbit_of_column)
        out.push_back(k >= 0 ? r[k] : 0);
    return out;
}

Row permute_columns(const Row& r, const std::vector<int>& perm)
{
    Row out(r.size());
    for (std::size_t k = 0; k < r.size(); ++k)
        out[k] = r[perm[k]];
    return out;
}

// Permutations of the columns that only exchange labels of equal cardinality.
std::vector<std::vector<int>> cardinality_preserving(const std::vector<Mask>& labels, std::size_t limit)
{
    std::vector<int> perm(labels.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out{perm};
    for (std::size_t k = 0; k < labels.size(); ++k) {
        std::vector<int> group;
        for (std::size_t j = 0; j < labels.size(); ++j)
            if (cardinality(labels[j]) == cardinality(labels[k]))
                group.push_back(static_cast<int>(j));
        if (group.front() != static_cast<int>(k) || group.size() < 2)
            continue;
        std::vector<std::vector<int>> next;
        for (const auto& base : out) {
            std::vector<int> images = group;
            do {
                auto p = base;
                for (std::size_t g = 0; g < group.size(); ++g)
                    p[group[g]] = images[g];
                next.push_back(p);
                if (next.size() > limit)
                    return {out.front()};
            } while (std::next_permutation(images.begin(), images.end()));
        }
        out = std::move(next);
    }
    return out;
}

struct Candidate {
    Permutation sigma;
    std::vector<int> columns;
    ColumnMatch match;
    std::set<Row> computed;
    std::set<Row> reference;
    std::size_t common = 0;
};

Candidate evaluate(const OrbitStructure& s, const std::vector<Row>& computed, const std::vector<Mask>& labels,
                   const std::vector<Row>& reference, const Permutation& sigma, const std::vector<int>& columns)
{
    Candidate c{sigma, columns, match_columns(s, labels, sigma), {}, {}, 0};
    for (const auto& r : computed)
        c.computed.insert(primitive(to_columns(r, c.match)));
    for (const auto& r : reference)
        c.reference.insert(primitive(permute_columns(r, columns)));
    for (const auto& r : c.computed)
        c.common += c.reference.count(r);
    return c;
}

bool exact(const Candidate& c)
{
    return c.match.bijective && c.common == c.computed.size() && c.common == c.reference.size();
}

std::string column_label(const ReferenceTable& ref, std::size_t k)
{
    return "O(" + mask_label(ref.labels[k]) + ")";
}

// Table row (printed order) -> orbit coordinates, using the diff's alignment.
std::optional<Row> to_orbits(const Row& printed, const TableDiff& d, const OrbitStructure& s,
                             const ReferenceTable& ref)
{
    const ColumnMatch m = match_columns(s, ref.labels, d.relabeling);
    if (!m.bijective)
        return std::nullopt;
    const Row r = permute_columns(printed, d.column_permutation);
    Row out(s.dimension(), 0);
    for (std::size_t k = 0; k < r.size(); ++k)
        out[m.orbit_of_column[k]] = r[k];
    return out;
}

}  // namespace

TableDiff compare_rows(const OrbitStructure& s, const std::vector<Row>& computed, const std::vector<Mask>& labels,
                       const std::vector<Row>& reference)
{
    std::vector<int> identity_cols(labels.size());
    std::iota(identity_cols.begin(), identity_cols.end(), 0);
    const Permutation id = Permutation::identity(s.n);

    Candidate best = evaluate(s, computed, labels, reference, id, identity_cols);
    auto consider = [&](Candidate c) {
        if (c.match.bijective && c.common > best.common)
            best = std::move(c);
    };
    if (!exact(best) && best.match.uncovered.empty()) {
        for (const auto& sigma : all_permutations(s.n)) {
            consider(evaluate(s, computed, labels, reference, sigma, identity_cols));
            if (exact(best))
                break;
        }
    }
    if (!exact(best) && best.match.uncovered.empty()) {
        for (const auto& cols : cardinality_preserving(labels, 5040)) {
            consider(evaluate(s, computed, labels, reference, id, cols));
            if (exact(best))
                break;
        }
    }

    TableDiff d;
    d.equal = exact(best);
    d.relabeling = best.sigma;
    d.column_permutation = best.columns;
    d.uncovered = best.match.uncovered;
    d.computed_count = best.computed.size();
    d.reference_count = best.reference.size();
    d.common = best.common;
    for (const auto& r : best.computed)
        if (!best.reference.count(r))
            d.only_computed.push_back(r);
    // Report table rows as printed.
    std::vector<int> inverse(best.columns.size());
    for (std::size_t k = 0; k < best.columns.size(); ++k)
        inverse[best.columns[k]] = static_cast<int>(k);
    for (const auto& r : best.reference)
        if (!best.computed.count(r))
            d.only_reference.push_back(permute_columns(r, inverse));
    d.remarks.assign(d.only_reference.size(), "");

    if (!d.uncovered.empty()) {
        d.note = "table lists " + std::to_string(labels.size()) + " orbits; structure has " +
                 std::to_string(s.dimension()) + "; unlisted:";
        for (int k : d.uncovered)
            d.note += " " + s.label_string(k);
    } else if (!d.relabeling.is_identity()) {
        d.note = "columns matched after relabeling the points by " + d.relabeling.to_cycle_string();
    } else if (d.column_permutation != identity_cols) {
        d.note = "best agreement after exchanging table columns";
        for (std::size_t k = 0; k < labels.size(); ++k)
            if (d.column_permutation[k] > static_cast<int>(k))
                d.note += " O(" + mask_label(labels[k]) + ")<->O(" + mask_label(labels[d.column_permutation[k]]) + ")";
    }
    return d;
}

TableDiff compare_hrep(const HRep& h, const ReferenceTable& ref)
{
    return compare_rows(h.structure, h.rows, ref.labels, ref.hrep);
}

IntVector uniform_vector(const OrbitStructure& s, int i)
{
    IntVector v;
    for (const auto& o : s.orbits)
        v.emplace_back(std::min(cardinality(o.front()), i));
    return v;
}

TableDiff compare_vrep(const VRep& v, const ReferenceTable& ref)
{
    std::vector<Row> computed;
    for (const auto& r : v.rays) {
        Row row;
        for (const auto& x : r)
            row.push_back(x.get_si());
        computed.push_back(std::move(row));
    }
    // U_{i,n} as a row in table column order: min(|label|, i).
    std::vector<Row> reference = ref.vrep;
    for (int i : ref.uniform_ranks) {
        Row u;
        for (Mask l : ref.labels)
            u.push_back(std::min(cardinality(l), i));
        reference.push_back(u);
    }
    return compare_rows(v.structure, computed, ref.labels, reference);
}

std::optional<OrbitStructure> find_merged_structure(const OrbitStructure& s, const ReferenceTable& ref)
{
    const ColumnMatch m = match_columns(s, ref.labels, Permutation::identity(s.n));
    if (m.uncovered.empty())
        return std::nullopt;
    for (int u : m.uncovered) {
        for (int c : m.orbit_of_column) {
            if (c < 0 || cardinality(s.label(c)) != cardinality(s.label(u)))
                continue;
            std::vector<std::vector<Mask>> parts;
            for (int k = 0; k < s.dimension(); ++k) {
                if (k == u)
                    continue;
                parts.push_back(s.orbits[k]);
                if (k == c)
                    parts.back().insert(parts.back().end(), s.orbits[u].begin(), s.orbits[u].end());
            }
            const OrbitStructure merged = structure_from_partition(s.n, parts);
            if (compare_hrep(build_hrep(merged), ref).equal)
                return merged;
        }
    }
    return std::nullopt;
}

std::string describe(const TableDiff& d, const OrbitStructure&)
{
    std::ostringstream os;
    os << (d.equal ? "match" : "MISMATCH") << ": computed " << d.computed_count << ", table " << d.reference_count
       << ", common " << d.common;
    if (!d.note.empty())
        os << " (" << d.note << ")";
    for (const auto& r : d.only_computed)
        os << "\n    computed only: " << to_string(r);
    for (std::size_t i = 0; i < d.only_reference.size(); ++i) {
        os << "\n    table only:    " << to_string(d.only_reference[i]);
        if (!d.remarks[i].empty())
            os << "  -- " << d.remarks[i];
    }
    return os.str();
}

void annotate_hrep(TableDiff& d, const VRep& rays, const ReferenceTable& ref)
{
    for (std::size_t i = 0; i < d.only_reference.size(); ++i) {
        const Row& printed = d.only_reference[i];
        const auto row = to_orbits(printed, d, rays.structure, ref);
        if (!row) {
            d.remarks[i] = "columns do not cover the structure";
            continue;
        }
        std::string remark;
        const auto total = std::accumulate(printed.begin(), printed.end(), std::int64_t{0});
        // symmetrized elemental rows sum to 0, or to 1 for h(i) + h(j) >= h(ij)
        if (total != 0 && total != 1)
            remark = "coefficients sum to " + std::to_string(total) + ", impossible for a symmetrized elemental row; ";
        const IntVector* violator = nullptr;
        Integer worst = 0;
        for (const auto& r : rays.rays) {
            const Integer v = dot(*row, r);
            if (v < worst) {
                worst = v;
                violator = &r;
            }
        }
        if (violator)
            remark += "violated by computed ray (" + to_string(*violator) + "), value " + worst.get_str();
        else
            remark += "valid on every computed ray (implied, not a facet row of the computed list)";
        d.remarks[i] = remark;
    }
}

void annotate_vrep(TableDiff& d, const HRep& h, const ReferenceTable& ref)
{
    d.infeasible.assign(d.only_reference.size(), false);
    for (std::size_t i = 0; i < d.only_reference.size(); ++i) {
        const Row& printed = d.only_reference[i];
        std::string remark;
        // Nearest computed ray: same after scaling except in one column.
        for (const auto& c : d.only_computed) {
            Row cc = permute_columns(c, [&] {
                std::vector<int> inv(d.column_permutation.size());
                for (std::size_t k = 0; k < inv.size(); ++k)
                    inv[d.column_permutation[k]] = static_cast<int>(k);
                return inv;
            }());
            std::vector<std::size_t> differ;
            for (std::size_t k = 0; k < printed.size(); ++k)
                if (printed[k] * cc[0] != cc[k] * printed[0])
                    differ.push_back(k);
            if (printed[0] != 0 && cc[0] != 0 && differ.size() == 1) {
                remark = "agrees with computed ray (" + to_string(c) + ") except in column " +
                         column_label(ref, differ[0]);
                break;
            }
        }
        if (const auto row = to_orbits(printed, d, h.structure, ref)) {
            IntVector x(row->begin(), row->end());
            bool feasible = true;
            for (std::size_t k = 0; k < h.rows.size() && feasible; ++k)
                if (sgn(dot(h.rows[k], x)) < 0) {
                    feasible = false;
                    remark += (remark.empty() ? "" : "; ") + std::string("violates inequality (") +
                              to_string(h.rows[k]) + ")";
                }
            d.infeasible[i] = !feasible;
            if (feasible)
                remark += (remark.empty() ? "" : "; ") +
                          std::string(verify_extremality(h, x) ? "an extreme ray missing from the computed list"
                                                               : "inside the cone but not an extreme ray");
        }
        d.remarks[i] = remark;
    }
}
}  // namespace symcone
