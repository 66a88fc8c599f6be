#include "symcone/shannon_cone.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace symcone {

std::vector<Row> elemental_inequalities(int n)
{
    if (n < 1 || n > 7)
        throw std::invalid_argument("elemental_inequalities supports 1 <= n <= 7");
    const Mask all = full_mask(n);
    const std::size_t width = all;
    std::vector<Row> rows;

    for (int i = 1; i <= n; ++i) {
        Row r(width, 0);
        r[all - 1] += 1;
        const Mask rest = all & ~point_bit(i);
        if (rest != 0)
            r[rest - 1] -= 1;
        rows.push_back(std::move(r));
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Mask ij = point_bit(i) | point_bit(j);
            const Mask others = all & ~ij;
            // Every K inside `others`, including the empty set.
            for (Mask k = others;; k = (k - 1) & others) {
                Row r(width, 0);
                r[(k | point_bit(i)) - 1] += 1;
                r[(k | point_bit(j)) - 1] += 1;
                if (k != 0)
                    r[k - 1] -= 1;
                r[(k | ij) - 1] -= 1;
                rows.push_back(std::move(r));
                if (k == 0)
                    break;
            }
        }
    }
    return rows;
}

Row primitive(Row r)
{
    std::int64_t g = 0;
    for (auto x : r)
        g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (auto& x : r)
            x /= g;
    return r;
}

Row symmetrize(const Row& full, const OrbitStructure& s)
{
    if (full.size() != (std::size_t{1} << s.n) - 1)
        throw std::invalid_argument("symmetrize: row length does not match 2^n - 1");
    Row out(s.dimension(), 0);
    for (std::size_t col = 0; col < full.size(); ++col)
        if (full[col] != 0)
            out[s.orbit_of[col + 1]] += full[col];
    return primitive(std::move(out));
}

HRep build_hrep(const OrbitStructure& s)
{
    std::set<Row> unique;
    for (const auto& full : elemental_inequalities(s.n)) {
        Row r = symmetrize(full, s);
        if (std::any_of(r.begin(), r.end(), [](auto x) { return x != 0; }))
            unique.insert(std::move(r));
    }
    return HRep{s, {unique.begin(), unique.end()}};
}

}  // namespace symcone
