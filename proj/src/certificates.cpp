#include "symcone/certificates.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symcone {

namespace {

constexpr Mask R(int a) { return Mask{1} << (a - 1); }

}  // namespace

// I(1;2) + I(1;34) + 3 I(3;4|1) + I(3;4|2) - 2 I(3;4), expanded in h.
// The h(2) terms cancel.
const std::array<ZYTerm, 11> kZhangYeungTerms = {{
    {R(1), -1},
    {R(3), -2},
    {R(4), -2},
    {R(1) | R(2), -1},
    {R(1) | R(3), 3},
    {R(1) | R(4), 3},
    {R(2) | R(3), 1},
    {R(2) | R(4), 1},
    {R(3) | R(4), 3},
    {R(1) | R(3) | R(4), -4},
    {R(2) | R(3) | R(4), -1},
}};

Rational zy_value(const RankFunction& h, const std::array<int, 4>& roles)
{
    if (h.n != 4)
        throw std::invalid_argument("zy_value: rank function must have 4 points, got " + std::to_string(h.n));
    {
        auto sorted = roles;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != std::array<int, 4>{1, 2, 3, 4})
            throw std::invalid_argument("zy_value: roles must be a bijection onto {1,2,3,4}");
    }
    Rational e = 0;
    for (const auto& term : kZhangYeungTerms) {
        Mask a = 0;
        for (int r = 0; r < 4; ++r)
            if (term.roles & R(r + 1))
                a |= point_bit(roles[r]);
        e += term.coefficient * h(a);
    }
    return e;
}

ZYCertificate zy_minor(const RankFunction& h, Mask contract_set, Mask restrict_set)
{
    if (cardinality(restrict_set) != 4)
        throw std::invalid_argument("zy_minor: restriction set must have 4 points");
    const RankFunction m = minor(h, contract_set, restrict_set);
    std::array<int, 4> roles{1, 2, 3, 4};
    ZYCertificate best;
    bool first = true;
    do {
        if (roles[2] > roles[3])
            continue;  // same value as with X3 and X4 swapped
        const Rational v = zy_value(m, roles);
        if (first || v < best.value) {
            first = false;
            best.value = v;
            for (int r = 0; r < 4; ++r)
                best.roles[r] = m.origin[roles[r] - 1];
        }
    } while (std::next_permutation(roles.begin(), roles.end()));
    best.contract_set = contract_set;
    best.restrict_set = restrict_set;
    // Report in the caller's labels.
    Mask c = 0, y = 0;
    for (int p : mask_points(contract_set))
        c |= point_bit(h.origin[p - 1]);
    for (int p : mask_points(restrict_set))
        y |= point_bit(h.origin[p - 1]);
    best.contract_set = c;
    best.restrict_set = y;
    return best;
}

std::optional<ZYCertificate> zy_violation_search(const RankFunction& h)
{
    if (h.n < 4)
        return std::nullopt;
    const Mask all = full_mask(h.n);
    std::vector<Mask> subsets;
    for (Mask m = 0; m <= all; ++m)
        subsets.push_back(m);
    std::sort(subsets.begin(), subsets.end(), mask_canonical_less);

    std::optional<ZYCertificate> best;
    for (Mask x : subsets) {
        for (Mask y : subsets) {
            if (cardinality(y) != 4 || (x & y))
                continue;
            auto c = zy_minor(h, x, y);
            if (sgn(c.value) < 0 && (!best || c.value < best->value))
                best = c;
        }
    }
    return best;
}

std::string describe(const ZYCertificate& c)
{
    std::ostringstream os;
    os << "contract " << mask_to_string(c.contract_set) << ", restrict " << mask_to_string(c.restrict_set)
       << ", roles X1..X4 = (" << c.roles[0] << "," << c.roles[1] << "," << c.roles[2] << "," << c.roles[3]
       << "), ZY value " << c.value.get_str();
    return os.str();
}

// ---------------------------------------------------------------------------

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::vector<int> GFMatrix::columns_of(Mask a) const
{
    std::vector<int> out;
    for (int p : mask_points(a)) {
        if (p > degree())
            throw std::invalid_argument("GFMatrix: no block for point " + std::to_string(p));
        const auto& b = blocks[p - 1];
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

void GFMatrix::validate() const
{
    if (!is_prime(p))
        throw std::invalid_argument("GFMatrix: modulus " + std::to_string(p) + " is not prime");
    if (rows < 0 || cols < 0 || entries.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("GFMatrix: entry count does not match " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
    for (int e : entries)
        if (e < 0 || e >= p)
            throw std::invalid_argument("GFMatrix: entry " + std::to_string(e) + " outside [0,p)");
    std::vector<int> seen(cols, 0);
    for (const auto& b : blocks)
        for (int c : b) {
            if (c < 0 || c >= cols)
                throw std::invalid_argument("GFMatrix: block column out of range");
            ++seen[c];
        }
    if (std::any_of(seen.begin(), seen.end(), [](int k) { return k != 1; }))
        throw std::invalid_argument("GFMatrix: blocks must partition the columns");
}

namespace {

int inverse_mod(int a, int p)
{
    int result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1)
            result = static_cast<int>(static_cast<long long>(result) * base % p);
        base = static_cast<int>(static_cast<long long>(base) * base % p);
        e >>= 1;
    }
    return result;
}

// Row reduction of an r x c matrix mod p; returns the rank and leaves m in echelon form.
int eliminate(std::vector<std::vector<int>>& m, int width, int p, std::vector<int>* pivots = nullptr)
{
    int rank = 0;
    const int height = static_cast<int>(m.size());
    for (int col = 0; col < width && rank < height; ++col) {
        int sel = rank;
        while (sel < height && m[sel][col] == 0)
            ++sel;
        if (sel == height)
            continue;
        std::swap(m[rank], m[sel]);
        const int inv = inverse_mod(m[rank][col], p);
        for (int c = 0; c < width; ++c)
            m[rank][c] = static_cast<int>(static_cast<long long>(m[rank][c]) * inv % p);
        for (int r = 0; r < height; ++r) {
            if (r == rank || m[r][col] == 0)
                continue;
            const int f = m[r][col];
            for (int c = 0; c < width; ++c)
                m[r][c] = ((m[r][c] - f * m[rank][c]) % p + p) % p;
        }
        if (pivots)
            pivots->push_back(col);
        ++rank;
    }
    return rank;
}

}  // namespace

int gf_rank(const GFMatrix& m, const std::vector<int>& columns)
{
    if (!is_prime(m.p))
        throw std::invalid_argument("gf_rank: modulus is not prime");
    const int width = static_cast<int>(columns.size());
    std::vector<std::vector<int>> sub(m.rows, std::vector<int>(width));
    for (int r = 0; r < m.rows; ++r)
        for (int k = 0; k < width; ++k) {
            if (columns[k] < 0 || columns[k] >= m.cols)
                throw std::out_of_range("gf_rank: column out of range");
            sub[r][k] = m.at(r, columns[k]);
        }
    return eliminate(sub, width, m.p);
}

int gf_rank(const GFMatrix& m, Mask points) { return gf_rank(m, m.columns_of(points)); }

RankFunction rank_function(const GFMatrix& m)
{
    RankFunction h(m.degree());
    for (Mask a = 1; a <= full_mask(h.n); ++a)
        h[a] = gf_rank(m, a);
    return h;
}

RepresentationReport verify_multilinear_rep(const GFMatrix& m, const RankFunction& h)
{
    m.validate();
    if (m.degree() != h.n)
        throw std::invalid_argument("verify_multilinear_rep: matrix has " + std::to_string(m.degree()) +
                                    " blocks but the rank function has " + std::to_string(h.n) + " points");
    for (Mask a = 1; a <= full_mask(h.n); ++a) {
        const int r = gf_rank(m, a);
        if (h(a) != r) {
            RepresentationReport out;
            out.ok = false;
            out.mismatch = a;
            out.actual = r;
            out.expected = h(a).get_den() == 1 ? static_cast<int>(h(a).get_num().get_si()) : -1;
            return out;
        }
    }
    return {};
}

std::string to_string(RayStatusKind k)
{
    switch (k) {
    case RayStatusKind::AlmostEntropic: return "AlmostEntropic";
    case RayStatusKind::NonEntropic: return "NonEntropic";
    case RayStatusKind::Unknown: return "Unknown";
    }
    return "?";
}

std::optional<std::pair<Permutation, Rational>> match_representation(const GFMatrix& m, const RankFunction& h)
{
    if (m.degree() != h.n)
        return std::nullopt;
    const RankFunction r = rank_function(m);
    const Mask all = full_mask(h.n);
    if (sgn(r(all)) == 0)
        return std::nullopt;
    const Rational c = h(all) / r(all);
    if (sgn(c) <= 0)
        return std::nullopt;
    std::vector<int> images(h.n);
    std::iota(images.begin(), images.end(), 1);
    do {
        const Permutation sigma(h.n, images);
        bool ok = true;
        for (Mask a = 1; a <= all && ok; ++a)
            ok = h(sigma.apply(a)) == c * r(a);
        if (ok)
            return std::make_pair(sigma, c);
    } while (std::next_permutation(images.begin(), images.end()));
    return std::nullopt;
}

RayStatus certify_ray(const OrbitStructure& s, const IntVector& ray, const std::vector<GFMatrix>& evidence)
{
    const RankFunction h = expand(s, ray);
    RayStatus status;
    if (auto i = uniform_rank(h)) {
        status.kind = RayStatusKind::AlmostEntropic;
        status.reason = "uniform matroid U_{" + std::to_string(*i) + "," + std::to_string(s.n) + "}";
        return status;
    }
    for (const auto& m : evidence) {
        if (auto match = match_representation(m, h)) {
            status.kind = RayStatusKind::AlmostEntropic;
            status.reason = "GF(" + std::to_string(m.p) + ") representation" + (m.name.empty() ? "" : " " + m.name);
            status.relabeling = match->first;
            status.scale = match->second;
            return status;
        }
    }
    if (auto c = zy_violation_search(h)) {
        status.kind = RayStatusKind::NonEntropic;
        status.reason = "Zhang-Yeung violation: " + describe(*c);
        status.zy = c;
        return status;
    }
    status.reason = "no certificate";
    return status;
}

// ---------------------------------------------------------------------------

namespace {

using Poly = std::uint64_t;  // GF(2)[x], bit i = coefficient of x^i

int poly_degree(Poly f) { return 63 - __builtin_clzll(f); }

Poly poly_mod(Poly a, Poly b)
{
    const int db = poly_degree(b);
    while (a && poly_degree(a) >= db)
        a ^= b << (poly_degree(a) - db);
    return a;
}

Poly poly_div(Poly a, Poly b)
{
    Poly q = 0;
    const int db = poly_degree(b);
    while (a && poly_degree(a) >= db) {
        q |= Poly{1} << (poly_degree(a) - db);
        a ^= b << (poly_degree(a) - db);
    }
    return q;
}

bool irreducible(Poly f)
{
    const int d = poly_degree(f);
    for (Poly g = 2; poly_degree(g) <= d / 2; ++g)
        if (poly_mod(f, g) == 0)
            return false;
    return true;
}

// f = g^e for an irreducible g
bool primary(Poly f)
{
    if (poly_degree(f) < 1)
        return false;
    Poly g = 2;
    while (!(irreducible(g) && poly_mod(f, g) == 0))
        ++g;
    while (poly_mod(f, g) == 0)
        f = poly_div(f, g);
    return f == 1;
}

int rank_bits(std::vector<std::uint32_t> v)
{
    int r = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::uint32_t x = v[i];
        for (int j = 0; j < r; ++j)
            x = std::min(x, x ^ v[j]);
        if (x) {
            v[r++] = x;
            // keep the basis reduced so min() above acts as elimination
            std::sort(v.begin(), v.begin() + r, std::greater<>());
        }
    }
    return r;
}

}  // namespace

std::optional<GFMatrix> search_cyclic_representation(const RankFunction& h, std::uint64_t budget)
{
    const int n = h.n;
    if (n < 2)
        return std::nullopt;
    for (Mask a = 1; a <= full_mask(n); ++a)
        if (h(a).get_den() != 1)
            return std::nullopt;
    const int k = static_cast<int>(h(1).get_num().get_si());
    const int dim = static_cast<int>(h(full_mask(n)).get_num().get_si());
    if (k < 1 || dim < 1 || dim > 24)
        return std::nullopt;
    for (int i = 1; i <= n; ++i)
        if (h(point_bit(i)) != k)
            return std::nullopt;

    // An n-cycle automorphism, written as the point order 1, s(1), s^2(1), ...
    std::vector<int> order;
    for (const auto& s : all_permutations(n)) {
        if (s.cycle_type() != std::vector<int>{n})
            continue;
        bool invariant = true;
        for (Mask a = 1; a <= full_mask(n) && invariant; ++a)
            invariant = h(s.apply(a)) == h(a);
        if (!invariant)
            continue;
        order.push_back(1);
        for (int i = 1; i < n; ++i)
            order.push_back(s(order.back()));
        break;
    }
    if (order.empty())
        return std::nullopt;

    // Up to conjugacy, T with T^n = I is a direct sum of companion matrices of
    // primary divisors g^e of x^n - 1 (for odd n: the irreducible factors).
    const Poly xn1 = (Poly{1} << n) | 1;
    std::vector<Poly> factors;
    for (Poly f = 2; poly_degree(f) <= std::min(n, dim); ++f)
        if (poly_mod(xn1, f) == 0 && primary(f))
            factors.push_back(f);

    std::vector<Mask> masks;
    for (Mask a = 1; a <= full_mask(n); ++a)
        masks.push_back(a);
    std::stable_sort(masks.begin(), masks.end(), [](Mask a, Mask b) { return cardinality(a) < cardinality(b); });

    std::uint64_t spent = 0;
    std::vector<int> mult(factors.size(), 0);
    std::optional<GFMatrix> found;

    auto try_operator = [&]() {
        std::vector<std::uint32_t> tcol(dim);
        int pos = 0;
        for (std::size_t f = 0; f < factors.size(); ++f) {
            const int d = poly_degree(factors[f]);
            for (int m = 0; m < mult[f]; ++m) {
                for (int j = 0; j + 1 < d; ++j)
                    tcol[pos + j] = std::uint32_t{1} << (pos + j + 1);
                std::uint32_t last = 0;
                for (int t = 0; t < d; ++t)
                    if (factors[f] >> t & 1)
                        last |= std::uint32_t{1} << (pos + t);
                tcol[pos + d - 1] = last;
                pos += d;
            }
        }
        auto apply = [&](std::uint32_t x) {
            std::uint32_t y = 0;
            for (int j = 0; j < dim; ++j)
                if (x >> j & 1)
                    y ^= tcol[j];
            return y;
        };
        const std::uint32_t top = std::uint32_t{1} << dim;
        std::vector<std::uint32_t> block(k);
        // columns[i][c]: column c of the block at position i of the cycle
        std::vector<std::vector<std::uint32_t>> columns(n, std::vector<std::uint32_t>(k));
        auto check = [&]() {
            for (int c = 0; c < k; ++c) {
                columns[0][c] = block[c];
                for (int i = 1; i < n; ++i)
                    columns[i][c] = apply(columns[i - 1][c]);
            }
            std::vector<std::uint32_t> vs;
            for (Mask a : masks) {
                vs.clear();
                for (int i = 0; i < n; ++i)
                    if (a >> (order[i] - 1) & 1)
                        vs.insert(vs.end(), columns[i].begin(), columns[i].end());
                if (rank_bits(vs) != h(a))
                    return false;
            }
            return true;
        };
        auto rec = [&](auto&& self, int c, std::uint32_t from) -> bool {
            if (c == k) {
                ++spent;
                return check();
            }
            for (std::uint32_t v = from; v < top; ++v) {
                if (spent >= budget)
                    return false;
                block[c] = v;
                if (self(self, c + 1, v + 1))
                    return true;
            }
            return false;
        };
        if (!rec(rec, 0, 1))
            return false;
        GFMatrix m;
        m.p = 2;
        m.rows = dim;
        m.cols = n * k;
        m.entries.assign(static_cast<std::size_t>(dim) * n * k, 0);
        m.blocks.assign(n, {});
        for (int i = 0; i < n; ++i) {
            const int point = order[i];
            for (int c = 0; c < k; ++c) {
                const int col = (point - 1) * k + c;
                m.blocks[point - 1].push_back(col);
                for (int r = 0; r < dim; ++r)
                    m.entries[static_cast<std::size_t>(r) * m.cols + col] = columns[i][c] >> r & 1;
            }
        }
        m.name = "C" + std::to_string(n) + "-equivariant GF(2) search";
        found = m;
        return true;
    };

    auto split = [&](auto&& self, std::size_t f, int left) -> bool {
        if (f == factors.size())
            return left == 0 && try_operator();
        const int d = poly_degree(factors[f]);
        for (int m = left / d; m >= 0; --m) {
            mult[f] = m;
            if (self(self, f + 1, left - m * d))
                return true;
            if (spent >= budget)
                return false;
        }
        mult[f] = 0;
        return false;
    };
    split(split, 0, dim);
    if (found && !verify_multilinear_rep(*found, h))
        throw std::logic_error("search_cyclic_representation: produced matrix does not verify");
    return found;
}

bool is_fano_line_set(const std::vector<Mask>& lines)
{
    if (lines.size() != 7)
        return false;
    for (Mask l : lines)
        if (cardinality(l) != 3 || (l & ~full_mask(7)))
            return false;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (cardinality(lines[i] & lines[j]) != 1)
                return false;
    return true;
}

std::optional<GFMatrix> fano_representation(const std::vector<Mask>& lines)
{
    if (!is_fano_line_set(lines))
        return std::nullopt;
    std::vector<Mask> wanted = lines;
    std::sort(wanted.begin(), wanted.end());
    std::array<int, 7> vec{1, 2, 3, 4, 5, 6, 7};  // vec[i] = GF(2)^3 vector of point i+1
    do {
        std::vector<Mask> dependent;
        for (int a = 0; a < 7; ++a)
            for (int b = a + 1; b < 7; ++b)
                for (int c = b + 1; c < 7; ++c)
                    if ((vec[a] ^ vec[b] ^ vec[c]) == 0)
                        dependent.push_back(point_bit(a + 1) | point_bit(b + 1) | point_bit(c + 1));
        std::sort(dependent.begin(), dependent.end());
        if (dependent == wanted) {
            GFMatrix m;
            m.p = 2;
            m.rows = 3;
            m.cols = 7;
            m.entries.assign(21, 0);
            for (int c = 0; c < 7; ++c) {
                for (int r = 0; r < 3; ++r)
                    m.entries[r * 7 + c] = (vec[c] >> r) & 1;
                m.blocks.push_back({c});
            }
            m.name = "Fano";
            return m;
        }
    } while (std::next_permutation(vec.begin(), vec.end()));
    return std::nullopt;
}

std::vector<std::vector<Mask>> fano_planes_within(const std::vector<Mask>& triples)
{
    std::vector<Mask> pool;
    for (Mask t : triples)
        if (cardinality(t) == 3 && !(t & ~full_mask(7)))
            pool.push_back(t);
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    // Lines pairwise meet in exactly one point; grow cliques of that relation.
    std::vector<std::vector<Mask>> out;
    std::vector<Mask> chosen;
    auto grow = [&](auto&& self, std::size_t from) -> void {
        if (chosen.size() == 7) {
            out.push_back(chosen);
            return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            bool ok = true;
            for (Mask c : chosen)
                if (cardinality(c & pool[i]) != 1) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            chosen.push_back(pool[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    grow(grow, 0);
    return out;
}

RankFunction fano_rank(const std::vector<Mask>& lines)
{
    if (!is_fano_line_set(lines))
        throw std::invalid_argument("fano_rank: not a Fano line set");
    RankFunction h(7);
    for (Mask a = 1; a <= full_mask(7); ++a)
        h[a] = std::min(cardinality(a), 3);
    for (Mask l : lines)
        h[l] = 2;
    return h;
}

GFMatrix dual_representation(const GFMatrix& m)
{
    m.validate();
    for (const auto& b : m.blocks)
        if (b.size() != 1)
            throw std::invalid_argument("dual_representation: needs one column per point");
    std::vector<std::vector<int>> a(m.rows, std::vector<int>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            a[r][c] = m.at(r, c);
    std::vector<int> pivots;
    const int rank = eliminate(a, m.cols, m.p, &pivots);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots)
        is_pivot[p] = true;

    GFMatrix out;
    out.p = m.p;
    out.cols = m.cols;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<int> x(m.cols, 0);
        x[f] = 1;
        for (int k = 0; k < rank; ++k)
            x[pivots[k]] = (m.p - a[k][f]) % m.p;
        out.entries.insert(out.entries.end(), x.begin(), x.end());
        ++out.rows;
    }
    // Point i keeps column position blocks[i-1][0].
    out.blocks = m.blocks;
    out.name = m.name.empty() ? "dual" : m.name + "*";
    return out;
}

GFMatrix direct_sum(const GFMatrix& a, const GFMatrix& b)
{
    if (a.p != b.p || a.degree() != b.degree())
        throw std::invalid_argument("direct_sum: matrices differ in field or degree");
    GFMatrix out;
    out.p = a.p;
    out.rows = a.rows + b.rows;
    out.cols = a.cols + b.cols;
    out.entries.assign(static_cast<std::size_t>(out.rows) * out.cols, 0);
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.cols; ++c)
            out.entries[r * out.cols + c] = a.at(r, c);
    for (int r = 0; r < b.rows; ++r)
        for (int c = 0; c < b.cols; ++c)
            out.entries[(a.rows + r) * out.cols + a.cols + c] = b.at(r, c);
    for (int i = 0; i < a.degree(); ++i) {
        auto block = a.blocks[i];
        for (int c : b.blocks[i])
            block.push_back(a.cols + c);
        out.blocks.push_back(block);
    }
    out.name = a.name + " + " + b.name;
    return out;
}

}  // namespace symcone
