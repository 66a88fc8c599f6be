#include "symcone/ray_enum.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "symcone/linalg.hpp"

namespace symcone {

namespace {

using ZeroSet = boost::dynamic_bitset<>;

struct DDRay {
    IntVector v;
    ZeroSet zeros;  // processed rows with a.v == 0
};

bool lex_less(const IntVector& a, const IntVector& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Integer& x, const Integer& y) { return cmp(x, y) < 0; });
}

struct IntVectorLess {
    bool operator()(const IntVector& a, const IntVector& b) const { return lex_less(a, b); }
};

std::vector<int> default_order(const HRep& h)
{
    std::vector<int> order(h.rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        auto nnz = [&](int i) { return std::count_if(h.rows[i].begin(), h.rows[i].end(), [](auto x) { return x != 0; }); };
        return nnz(a) < nnz(b);
    });
    return order;
}

// --- checked 64-bit arithmetic for the brute-force oracle -------------------

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in exact oracle arithmetic");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in exact oracle arithmetic");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in exact oracle arithmetic");
    return r;
}

// Integer row echelon form with fraction-free elimination.
struct Echelon {
    int width = 0;
    std::vector<Row> rows;
    std::vector<int> pivots;

    int rank() const { return static_cast<int>(rows.size()); }

    // Reduces v against the basis; true when something nonzero remains.
    bool reduce(Row& v) const
    {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const int p = pivots[k];
            if (v[p] == 0)
                continue;
            const std::int64_t a = rows[k][p];
            const std::int64_t b = v[p];
            for (int c = 0; c < width; ++c)
                v[c] = checked_sub(checked_mul(a, v[c]), checked_mul(b, rows[k][c]));
            v = primitive(std::move(v));
        }
        return std::any_of(v.begin(), v.end(), [](auto x) { return x != 0; });
    }

    void push(Row v)
    {
        int p = 0;
        while (v[p] == 0)
            ++p;
        rows.push_back(std::move(v));
        pivots.push_back(p);
    }

    // Kernel vector with x[free_col] = 1 (up to scaling) and zero on other free columns.
    Row kernel_vector(int free_col) const
    {
        Row x(width, 0);
        x[free_col] = 1;
        for (int k = rank() - 1; k >= 0; --k) {
            const Row& r = rows[k];
            const int p = pivots[k];
            std::int64_t s = 0;
            for (int c = 0; c < width; ++c)
                if (c != p && r[c] != 0 && x[c] != 0)
                    s = checked_add(s, checked_mul(r[c], x[c]));
            if (s == 0) {
                x[p] = 0;
                continue;
            }
            const std::int64_t piv = r[p];
            const std::int64_t g = std::gcd(s < 0 ? -s : s, piv < 0 ? -piv : piv);
            std::int64_t scale = (piv < 0 ? -piv : piv) / g;
            for (auto& e : x)
                e = checked_mul(e, scale);
            // piv * x_p + s * scale == 0
            x[p] = -(s / g) * (piv < 0 ? -1 : 1);
        }
        return primitive(std::move(x));
    }

    std::vector<int> free_columns() const
    {
        std::vector<bool> pivot(width, false);
        for (int p : pivots)
            pivot[p] = true;
        std::vector<int> out;
        for (int c = 0; c < width; ++c)
            if (!pivot[c])
                out.push_back(c);
        return out;
    }
};

// Visits every flat of the given rank of the row matroid on `indices` exactly
// once. A flat G is generated from the flat P spanned by the first k members
// of its greedy (index-ordered) basis, using its next basis element j; that is
// accepted iff j is the smallest index in G \ P and j exceeds P's last basis index.
void for_each_flat(const std::vector<Row>& rows, const std::vector<int>& indices, int width, int target_rank,
                   const std::function<void(const Echelon&, const std::vector<bool>&)>& visit)
{
    const int m = static_cast<int>(indices.size());
    std::function<void(const Echelon&, const std::vector<bool>&, int)> dfs =
        [&](const Echelon& basis, const std::vector<bool>& flat, int last) {
            if (basis.rank() == target_rank) {
                visit(basis, flat);
                return;
            }
            for (int j = last + 1; j < m; ++j) {
                if (flat[j])
                    continue;
                Row v = rows[indices[j]];
                if (!basis.reduce(v))
                    continue;
                Echelon next = basis;
                next.push(std::move(v));
                std::vector<bool> closed = flat;
                closed[j] = true;
                bool canonical = true;
                for (int i = 0; i < m; ++i) {
                    if (closed[i])
                        continue;
                    Row w = rows[indices[i]];
                    if (!next.reduce(w)) {
                        if (i < j) {
                            canonical = false;
                            break;
                        }
                        closed[i] = true;
                    }
                }
                if (canonical)
                    dfs(next, closed, j);
            }
        };
    Echelon root;
    root.width = width;
    std::vector<bool> flat(m, false);
    for (int i = 0; i < m; ++i)
        flat[i] = std::all_of(rows[indices[i]].begin(), rows[indices[i]].end(), [](auto x) { return x == 0; });
    dfs(root, flat, -1);
}

Row to_row(const IntVector& v)
{
    Row r;
    r.reserve(v.size());
    for (const auto& x : v) {
        if (!x.fits_slong_p())
            throw std::overflow_error("ray coordinate exceeds 64 bits");
        r.push_back(x.get_si());
    }
    return r;
}

IntVector to_int_vector(const Row& r)
{
    IntVector v;
    v.reserve(r.size());
    for (auto x : r)
        v.emplace_back(static_cast<long>(x));
    return v;
}

std::int64_t row_dot(const Row& a, const Row& x)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && x[i] != 0)
            s = checked_add(s, checked_mul(a[i], x[i]));
    return s;
}

}  // namespace

VRep make_vrep(const HRep& h, std::vector<IntVector> rays)
{
    std::sort(rays.begin(), rays.end(), IntVectorLess{});
    VRep out;
    out.structure = h.structure;
    out.rays = std::move(rays);
    for (const auto& r : out.rays) {
        std::vector<int> tight;
        for (std::size_t i = 0; i < h.rows.size(); ++i)
            if (sgn(dot(h.rows[i], r)) == 0)
                tight.push_back(static_cast<int>(i));
        out.tight.push_back(std::move(tight));
    }
    return out;
}

VRep double_description(const HRep& h, const DDOptions& options)
{
    const int d = h.dimension();
    const int m = static_cast<int>(h.rows.size());
    if (d == 0)
        return make_vrep(h, {});

    std::vector<int> order = options.insertion_order ? *options.insertion_order : default_order(h);
    {
        std::vector<int> check = order;
        std::sort(check.begin(), check.end());
        std::vector<int> expect(m);
        std::iota(expect.begin(), expect.end(), 0);
        if (check != expect)
            throw std::invalid_argument("double_description: insertion order is not a permutation of the rows");
    }

    // Initial simplicial cone from the first d independent rows.
    std::vector<int> basis;
    std::vector<RatVector> echelon;
    for (int idx : order) {
        auto trial = echelon;
        trial.push_back(to_rational(h.rows[idx]));
        if (rank(trial) > static_cast<int>(echelon.size())) {
            echelon = std::move(trial);
            basis.push_back(idx);
            if (static_cast<int>(basis.size()) == d)
                break;
        }
    }
    if (static_cast<int>(basis.size()) < d)
        throw NotPointedError("cone is not pointed: rows have rank " + std::to_string(basis.size()) + " < " +
                              std::to_string(d));

    // Columns of B^{-1} generate {x : Bx >= 0}.
    std::vector<RatVector> aug(d, RatVector(2 * d, 0));
    for (int i = 0; i < d; ++i) {
        for (int c = 0; c < d; ++c)
            aug[i][c] = static_cast<long>(h.rows[basis[i]][c]);
        aug[i][d + i] = 1;
    }
    for (int col = 0; col < d; ++col) {
        int sel = col;
        while (sgn(aug[sel][col]) == 0)
            ++sel;
        std::swap(aug[col], aug[sel]);
        const Rational inv = 1 / aug[col][col];
        for (auto& x : aug[col])
            x *= inv;
        for (int r = 0; r < d; ++r) {
            if (r == col || sgn(aug[r][col]) == 0)
                continue;
            const Rational f = aug[r][col];
            for (int c = 0; c < 2 * d; ++c)
                aug[r][c] -= f * aug[col][c];
        }
    }

    std::vector<DDRay> rays;
    for (int i = 0; i < d; ++i) {
        RatVector col(d);
        for (int r = 0; r < d; ++r)
            col[r] = aug[r][d + i];
        DDRay ray{primitive_integer(col), ZeroSet(m)};
        for (int k = 0; k < d; ++k)
            if (k != i)
                ray.zeros.set(basis[k]);
        rays.push_back(std::move(ray));
    }

    std::vector<bool> in_basis(m, false);
    for (int b : basis)
        in_basis[b] = true;

    for (int idx : order) {
        if (in_basis[idx])
            continue;
        const Row& a = h.rows[idx];
        std::vector<Integer> value(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            value[k] = dot(a, rays[k].v);
            const int s = sgn(value[k]);
            if (s > 0)
                pos.push_back(k);
            else if (s < 0)
                neg.push_back(k);
        }
        if (neg.empty()) {
            for (std::size_t k = 0; k < rays.size(); ++k)
                if (sgn(value[k]) == 0)
                    rays[k].zeros.set(idx);
            continue;
        }

        std::vector<DDRay> created;
        for (auto p : pos) {
            for (auto q : neg) {
                ZeroSet common = rays[p].zeros & rays[q].zeros;
                if (static_cast<int>(common.count()) < d - 2)
                    continue;
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t)
                    if (t != p && t != q && common.is_subset_of(rays[t].zeros))
                        adjacent = false;
                if (!adjacent)
                    continue;
                IntVector v(d);
                for (int c = 0; c < d; ++c)
                    v[c] = value[p] * rays[q].v[c] - value[q] * rays[p].v[c];
                common.set(idx);
                created.push_back(DDRay{primitive_integer(std::move(v)), std::move(common)});
            }
        }

        std::vector<DDRay> next;
        next.reserve(rays.size() - neg.size() + created.size());
        for (std::size_t k = 0; k < rays.size(); ++k) {
            const int s = sgn(value[k]);
            if (s < 0)
                continue;
            if (s == 0)
                rays[k].zeros.set(idx);
            next.push_back(std::move(rays[k]));
        }
        for (auto& c : created)
            next.push_back(std::move(c));
        rays = std::move(next);
    }

    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (auto& r : rays)
        out.push_back(std::move(r.v));
    return make_vrep(h, std::move(out));
}

bool verify_extremality(const HRep& h, const IntVector& r)
{
    if (static_cast<int>(r.size()) != h.dimension())
        throw std::invalid_argument("verify_extremality: dimension mismatch");
    std::vector<int> tight;
    for (std::size_t i = 0; i < h.rows.size(); ++i) {
        const int s = sgn(dot(h.rows[i], r));
        if (s < 0)
            throw std::domain_error("verify_extremality: vector violates row " + std::to_string(i));
        if (s == 0)
            tight.push_back(static_cast<int>(i));
    }
    if (std::all_of(r.begin(), r.end(), [](const Integer& x) { return sgn(x) == 0; }))
        return false;
    return rank_of_rows(h.rows, tight) == h.dimension() - 1;
}

VRep cross_check_brute(const HRep& h, int max_dimension)
{
    const int d = h.dimension();
    if (d > max_dimension)
        throw std::length_error("cross_check_brute: dimension " + std::to_string(d) + " exceeds limit " +
                                std::to_string(max_dimension));
    std::vector<int> all(h.rows.size());
    std::iota(all.begin(), all.end(), 0);
    std::set<IntVector, IntVectorLess> found;
    if (d == 1) {
        for (long sign : {1L, -1L}) {
            IntVector v{Integer(sign)};
            if (std::all_of(h.rows.begin(), h.rows.end(), [&](const Row& a) { return sgn(dot(a, v)) >= 0; }))
                found.insert(v);
        }
        return make_vrep(h, {found.begin(), found.end()});
    }
    for_each_flat(h.rows, all, d, d - 1, [&](const Echelon& e, const std::vector<bool>&) {
        const auto free = e.free_columns();
        const Row x = e.kernel_vector(free.front());
        bool nonneg = true, nonpos = true;
        for (const auto& a : h.rows) {
            const auto s = row_dot(a, x);
            nonneg = nonneg && s >= 0;
            nonpos = nonpos && s <= 0;
            if (!nonneg && !nonpos)
                return;
        }
        Row ray = x;
        if (!nonneg)
            for (auto& c : ray)
                c = -c;
        found.insert(to_int_vector(ray));
    });
    return make_vrep(h, {found.begin(), found.end()});
}

CompletenessReport verify_completeness(const HRep& h, const std::vector<IntVector>& rays)
{
    const int d = h.dimension();
    CompletenessReport report;
    if (rays.empty())
        return report;
    std::set<IntVector, IntVectorLess> known;
    for (const auto& r : rays) {
        if (!verify_extremality(h, r))
            throw std::domain_error("verify_completeness: input vector is not an extreme ray");
        known.insert(primitive_integer(r));
    }
    if (d <= 2) {
        // A pointed cone of dimension <= 2 has at most two rays; compare with the oracle.
        const auto brute = cross_check_brute(h, d);
        for (const auto& r : brute.rays)
            if (!known.count(r))
                report.missing.push_back(r);
        report.complete = report.missing.empty();
        return report;
    }

    std::set<IntVector, IntVectorLess> missing;
    for (const auto& ray : rays) {
        const Row r = to_row(primitive_integer(ray));
        std::vector<int> tight, slack;
        for (std::size_t i = 0; i < h.rows.size(); ++i)
            (row_dot(h.rows[i], r) == 0 ? tight : slack).push_back(static_cast<int>(i));

        for_each_flat(h.rows, tight, d, d - 2, [&](const Echelon& e, const std::vector<bool>& flat) {
            // The kernel is two-dimensional and contains r; pick a direction independent of r.
            Row dir;
            for (int f : e.free_columns()) {
                Row x = e.kernel_vector(f);
                bool parallel = true;
                for (int c = 0; c < d && parallel; ++c)
                    for (int c2 = c + 1; c2 < d && parallel; ++c2)
                        if (checked_mul(x[c], r[c2]) != checked_mul(x[c2], r[c]))
                            parallel = false;
                if (!parallel) {
                    dir = std::move(x);
                    break;
                }
            }
            bool nonneg = true, nonpos = true;
            for (std::size_t k = 0; k < tight.size(); ++k) {
                if (flat[k])
                    continue;
                const auto s = row_dot(h.rows[tight[k]], dir);
                nonneg = nonneg && s >= 0;
                nonpos = nonpos && s <= 0;
            }
            if (!nonneg && !nonpos)
                return;
            if (!nonneg)
                for (auto& c : dir)
                    c = -c;
            ++report.edges_checked;
            // Walk along dir + mu * r until the first slack row becomes tight.
            Rational mu;
            bool first = true;
            for (int i : slack) {
                const Rational cand(-row_dot(h.rows[i], dir), row_dot(h.rows[i], r));
                if (first || cand > mu) {
                    mu = cand;
                    first = false;
                }
            }
            RatVector nb(d);
            for (int c = 0; c < d; ++c)
                nb[c] = Rational(dir[c]) + mu * static_cast<long>(r[c]);
            nb[0].canonicalize();
            IntVector neighbour = primitive_integer(nb);
            if (!known.count(neighbour))
                missing.insert(neighbour);
        });
    }
    report.missing.assign(missing.begin(), missing.end());
    report.complete = report.missing.empty();
    return report;
}

}  // namespace symcone
