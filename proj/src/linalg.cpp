#include "symcone/linalg.hpp"

#include <stdexcept>

namespace symcone {

RatVector to_rational(const Row& r)
{
    RatVector out;
    out.reserve(r.size());
    for (auto x : r)
        out.emplace_back(static_cast<long>(x));
    return out;
}

RatVector to_rational(const IntVector& r)
{
    RatVector out;
    out.reserve(r.size());
    for (const auto& x : r)
        out.emplace_back(x);
    return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(std::vector<RatVector>& m, int width)
{
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int col = 0; col < width && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && sgn(m[sel][col]) == 0)
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[row], m[sel]);
        const Rational inv = 1 / m[row][col];
        for (int c = col; c < width; ++c)
            m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][col]) == 0)
                continue;
            const Rational f = m[r][col];
            for (int c = col; c < width; ++c)
                m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

}  // namespace

int rank(std::vector<RatVector> rows)
{
    if (rows.empty())
        return 0;
    const int width = static_cast<int>(rows.front().size());
    return static_cast<int>(rref(rows, width).size());
}

int rank_of_rows(const std::vector<Row>& rows, const std::vector<int>& which)
{
    std::vector<RatVector> m;
    for (int i : which)
        m.push_back(to_rational(rows.at(i)));
    return rank(std::move(m));
}

std::vector<RatVector> nullspace(std::vector<RatVector> rows, int width)
{
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != width)
            throw std::invalid_argument("nullspace: ragged matrix");
    const auto pivots = rref(rows, width);
    std::vector<bool> is_pivot(width, false);
    for (int p : pivots)
        is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (int free = 0; free < width; ++free) {
        if (is_pivot[free])
            continue;
        RatVector v(width, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -rows[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

IntVector primitive_integer(IntVector v)
{
    Integer g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

IntVector primitive_integer(const RatVector& v)
{
    Integer l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(Integer(x.get_num() * (l / x.get_den())));
    return primitive_integer(std::move(out));
}

Integer dot(const Row& a, const IntVector& x)
{
    if (a.size() != x.size())
        throw std::invalid_argument("dot: length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            s += x[i] * static_cast<long>(a[i]);
    return s;
}

Rational dot(const Row& a, const RatVector& x)
{
    if (a.size() != x.size())
        throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            s += x[i] * static_cast<long>(a[i]);
    return s;
}

}  // namespace symcone
