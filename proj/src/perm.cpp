#include "symcone/perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace symcone {

Permutation::Permutation(int degree) : degree_(degree)
{
    if (degree < 0 || degree > kMaxDegree)
        throw std::invalid_argument("permutation degree " + std::to_string(degree) + " outside 0.." +
                                    std::to_string(kMaxDegree));
    for (int i = 0; i < degree; ++i)
        images_[i] = static_cast<std::uint8_t>(i + 1);
}

Permutation::Permutation(int degree, const std::vector<int>& images) : Permutation(degree)
{
    if (static_cast<int>(images.size()) != degree)
        throw std::invalid_argument("expected " + std::to_string(degree) + " images, got " +
                                    std::to_string(images.size()));
    std::vector<bool> hit(degree + 1, false);
    for (int i = 0; i < degree; ++i) {
        const int v = images[i];
        if (v < 1 || v > degree || hit[v])
            throw std::invalid_argument("images do not form a bijection of 1.." + std::to_string(degree));
        hit[v] = true;
        images_[i] = static_cast<std::uint8_t>(v);
    }
}

std::vector<int> Permutation::images() const
{
    return std::vector<int>(images_.begin(), images_.begin() + degree_);
}

bool Permutation::is_identity() const
{
    for (int i = 0; i < degree_; ++i)
        if (images_[i] != i + 1)
            return false;
    return true;
}

Permutation Permutation::inverse() const
{
    Permutation out(degree_);
    for (int i = 0; i < degree_; ++i)
        out.images_[images_[i] - 1] = static_cast<std::uint8_t>(i + 1);
    return out;
}

Mask Permutation::apply(Mask subset) const
{
    Mask out = 0;
    for (int i = 0; subset != 0; ++i, subset >>= 1)
        if (subset & 1u)
            out |= point_bit(images_[i]);
    return out;
}

std::vector<int> Permutation::cycle_type() const
{
    std::vector<int> lengths;
    std::array<bool, kMaxDegree> seen{};
    for (int i = 0; i < degree_; ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j] - 1) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

int Permutation::order() const
{
    int result = 1;
    for (int len : cycle_type())
        result = std::lcm(result, len);
    return result;
}

std::string Permutation::to_cycle_string() const
{
    const bool wide = degree_ > 9;
    std::string out;
    std::array<bool, kMaxDegree> seen{};
    for (int i = 0; i < degree_; ++i) {
        if (seen[i] || images_[i] == i + 1)
            continue;
        out += '(';
        bool first = true;
        for (int j = i; !seen[j]; j = images_[j] - 1) {
            seen[j] = true;
            if (wide && !first)
                out += ',';
            out += std::to_string(j + 1);
            first = false;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

std::uint64_t Permutation::hash_key() const
{
    std::uint64_t key = static_cast<std::uint64_t>(degree_);
    for (int i = 0; i < degree_; ++i)
        key = (key << 4) | images_[i];
    return key;
}

Permutation compose(const Permutation& p, const Permutation& q)
{
    if (p.degree() != q.degree())
        throw std::invalid_argument("compose: degree mismatch (" + std::to_string(p.degree()) + " vs " +
                                    std::to_string(q.degree()) + ")");
    std::vector<int> img(p.degree());
    for (int i = 1; i <= p.degree(); ++i)
        img[i - 1] = p(q(i));
    return Permutation(p.degree(), img);
}

Permutation parse_perm(const std::string& text, int degree)
{
    if (degree < 1 || degree > kMaxDegree)
        throw std::invalid_argument("degree must be in 1.." + std::to_string(kMaxDegree));
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 1);
    std::vector<bool> used(degree + 1, false);

    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_space();
    while (i < text.size()) {
        if (text[i] != '(')
            throw ParseError("expected '('", i);
        const std::size_t open = i++;
        std::vector<int> cycle;
        bool closed = false;
        while (i < text.size()) {
            const char c = text[i];
            if (c == ')') {
                closed = true;
                ++i;
                break;
            }
            if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
            const std::size_t start = i;
            int point = 0;
            // Multi-digit points need separators; juxtaposed digits are single points.
            const bool separated = text.find_first_of(", ", open) < text.find(')', open);
            if (separated) {
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    point = point * 10 + (text[i++] - '0');
            } else {
                point = text[i++] - '0';
            }
            if (point < 1 || point > degree)
                throw ParseError("point " + std::to_string(point) + " outside 1.." + std::to_string(degree), start);
            if (used[point])
                throw ParseError("point " + std::to_string(point) + " repeated", start);
            used[point] = true;
            cycle.push_back(point);
        }
        if (!closed)
            throw ParseError("unbalanced parenthesis", open);
        for (std::size_t k = 0; k < cycle.size(); ++k)
            img[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
        skip_space();
    }
    return Permutation(degree, img);
}

std::vector<std::string> split_generators(const std::string& text)
{
    std::vector<std::string> out;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        if (c == ',' && depth == 0) {
            out.push_back(current);
            current.clear();
            continue;
        }
        if (depth == 0 && std::isspace(static_cast<unsigned char>(c)))
            continue;
        current += c;
    }
    if (!current.empty() || out.empty())
        out.push_back(current);
    return out;
}

bool PermGroup::contains(const Permutation& p) const
{
    return std::binary_search(elements.begin(), elements.end(), p);
}

std::string PermGroup::generator_string() const
{
    std::string out;
    for (const auto& g : generators) {
        if (!out.empty())
            out += ',';
        out += g.to_cycle_string();
    }
    return out;
}

PermGroup group_closure(const std::vector<Permutation>& generators, std::string name)
{
    if (generators.empty())
        throw std::invalid_argument("group_closure needs at least one generator");
    const int n = generators.front().degree();
    for (const auto& g : generators)
        if (g.degree() != n)
            throw std::invalid_argument("group_closure: generator degree mismatch");

    PermGroup out;
    out.degree = n;
    out.generators = generators;
    out.name = std::move(name);

    std::unordered_set<std::uint64_t> seen;
    std::vector<Permutation> frontier{Permutation::identity(n)};
    seen.insert(frontier.front().hash_key());
    out.elements.push_back(frontier.front());
    for (std::size_t head = 0; head < out.elements.size(); ++head) {
        const Permutation current = out.elements[head];
        for (const auto& g : generators) {
            Permutation next = current * g;
            if (seen.insert(next.hash_key()).second)
                out.elements.push_back(next);
        }
    }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

PermGroup group_from_string(const std::string& generators, int degree, std::string name)
{
    std::vector<Permutation> gens;
    for (const auto& cyc : split_generators(generators))
        gens.push_back(parse_perm(cyc, degree));
    return group_closure(gens, std::move(name));
}

std::vector<std::pair<std::vector<int>, int>> cycle_type_profile(const PermGroup& g)
{
    std::map<std::vector<int>, int> counts;
    for (const auto& e : g.elements)
        ++counts[e.cycle_type()];
    return {counts.begin(), counts.end()};
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(n, img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::optional<Permutation> are_conjugate(const PermGroup& g, const PermGroup& h)
{
    if (g.degree != h.degree || g.order() != h.order())
        return std::nullopt;
    if (g.degree > 9)
        throw std::invalid_argument("are_conjugate: exhaustive search limited to degree <= 9");
    if (cycle_type_profile(g) != cycle_type_profile(h))
        return std::nullopt;

    const int n = g.degree;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    do {
        const Permutation sigma(n, img);
        const Permutation sigma_inv = sigma.inverse();
        bool ok = true;
        for (const auto& gen : g.generators) {
            if (!h.contains(sigma * gen * sigma_inv)) {
                ok = false;
                break;
            }
        }
        if (ok)
            return sigma;
    } while (std::next_permutation(img.begin(), img.end()));
    return std::nullopt;
}

namespace {

// S_n for n <= 7 with elements addressed by their lexicographic rank.
class IndexedSymmetricGroup {
public:
    explicit IndexedSymmetricGroup(int n) : n_(n)
    {
        factorial_.assign(n + 1, 1);
        for (int i = 1; i <= n; ++i)
            factorial_[i] = factorial_[i - 1] * i;
        std::array<std::uint8_t, 8> p{};
        for (int i = 0; i < n; ++i)
            p[i] = static_cast<std::uint8_t>(i);
        do {
            perms_.push_back(p);
        } while (std::next_permutation(p.begin(), p.begin() + n));
        inverse_.resize(perms_.size());
        cycle_code_.resize(perms_.size());
        for (std::size_t i = 0; i < perms_.size(); ++i) {
            std::array<std::uint8_t, 8> inv{};
            for (int k = 0; k < n; ++k)
                inv[perms_[i][k]] = static_cast<std::uint8_t>(k);
            inverse_[i] = rank(inv);
            cycle_code_[i] = cycle_code(perms_[i]);
        }
    }

    int size() const { return static_cast<int>(perms_.size()); }
    int words() const { return (size() + 63) / 64; }

    int rank(const std::array<std::uint8_t, 8>& p) const
    {
        int r = 0;
        unsigned used = 0;
        for (int i = 0; i < n_; ++i) {
            const unsigned smaller = __builtin_popcount(((1u << p[i]) - 1) & ~used);
            r += static_cast<int>(smaller) * factorial_[n_ - 1 - i];
            used |= 1u << p[i];
        }
        return r;
    }

    // (a * b)(i) = a(b(i))
    int mul(int a, int b) const
    {
        std::array<std::uint8_t, 8> r{};
        const auto& pa = perms_[a];
        const auto& pb = perms_[b];
        for (int i = 0; i < n_; ++i)
            r[i] = pa[pb[i]];
        return rank(r);
    }

    int inverse(int a) const { return inverse_[a]; }
    std::uint32_t cycle_code_of(int a) const { return cycle_code_[a]; }

    Permutation to_perm(int a) const
    {
        std::vector<int> img(n_);
        for (int i = 0; i < n_; ++i)
            img[i] = perms_[a][i] + 1;
        return Permutation(n_, img);
    }

    int index_of(const Permutation& p) const
    {
        std::array<std::uint8_t, 8> a{};
        for (int i = 0; i < n_; ++i)
            a[i] = static_cast<std::uint8_t>(p(i + 1) - 1);
        return rank(a);
    }

private:
    std::uint32_t cycle_code(const std::array<std::uint8_t, 8>& p) const
    {
        std::array<int, 8> lengths{};
        unsigned seen = 0;
        int count = 0;
        for (int i = 0; i < n_; ++i) {
            if (seen & (1u << i))
                continue;
            int len = 0;
            for (int j = i; !(seen & (1u << j)); j = p[j]) {
                seen |= 1u << j;
                ++len;
            }
            lengths[count++] = len;
        }
        std::sort(lengths.begin(), lengths.begin() + count);
        std::uint32_t code = 0;
        for (int i = 0; i < count; ++i)
            code = code * 8 + static_cast<std::uint32_t>(lengths[i]);
        return code;
    }

    int n_;
    std::vector<int> factorial_;
    std::vector<std::array<std::uint8_t, 8>> perms_;
    std::vector<int> inverse_;
    std::vector<std::uint32_t> cycle_code_;
};

using Bits = std::vector<std::uint64_t>;

inline bool test_bit(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1u; }
inline void set_bit(Bits& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

struct BitsHash {
    std::size_t operator()(const Bits& b) const
    {
        std::uint64_t h = 1469598103934665603ull;
        for (auto w : b)
            h = (h ^ w) * 1099511628211ull;
        return static_cast<std::size_t>(h);
    }
};

struct IndexedGroup {
    Bits bits;
    std::vector<int> elements;
    std::vector<int> generators;
};

IndexedGroup closure(const IndexedSymmetricGroup& sym, std::vector<int> generators)
{
    IndexedGroup g;
    g.bits.assign(sym.words(), 0);
    g.generators = std::move(generators);
    g.elements.push_back(0);  // rank 0 is the identity
    set_bit(g.bits, 0);
    for (std::size_t head = 0; head < g.elements.size(); ++head) {
        const int cur = g.elements[head];
        for (int gen : g.generators) {
            const int next = sym.mul(cur, gen);
            if (!test_bit(g.bits, next)) {
                set_bit(g.bits, next);
                g.elements.push_back(next);
            }
        }
    }
    return g;
}

// Order and cycle-type histogram; equal for conjugate subgroups.
std::vector<std::uint32_t> invariant_key(const IndexedSymmetricGroup& sym, const IndexedGroup& g)
{
    std::map<std::uint32_t, std::uint32_t> hist;
    for (int e : g.elements)
        ++hist[sym.cycle_code_of(e)];
    std::vector<std::uint32_t> key{static_cast<std::uint32_t>(g.elements.size())};
    for (const auto& [code, count] : hist) {
        key.push_back(code);
        key.push_back(count);
    }
    return key;
}

bool conjugate_indexed(const IndexedSymmetricGroup& sym, const IndexedGroup& g, const IndexedGroup& h)
{
    for (int s = 0; s < sym.size(); ++s) {
        const int s_inv = sym.inverse(s);
        bool ok = true;
        for (int gen : g.generators) {
            if (!test_bit(h.bits, sym.mul(sym.mul(s, gen), s_inv))) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    }
    return false;
}

struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const
    {
        std::size_t h = 0;
        for (auto x : v)
            h = h * 1000003u + x;
        return h;
    }
};

}  // namespace

SubgroupClasses enumerate_subgroup_classes(int degree, const EnumerationBudget& budget)
{
    if (degree < 1 || degree > 7)
        throw std::invalid_argument("enumerate_subgroup_classes supports degree 1..7");
    const auto start = std::chrono::steady_clock::now();
    const IndexedSymmetricGroup sym(degree);

    std::vector<IndexedGroup> classes;
    std::unordered_map<std::vector<std::uint32_t>, std::vector<int>, VecHash> by_key;
    std::unordered_set<Bits, BitsHash> seen;

    SubgroupClasses result;
    result.degree = degree;

    auto over_budget = [&] {
        if (budget.max_classes && classes.size() >= *budget.max_classes)
            return true;
        if (budget.time_limit && std::chrono::steady_clock::now() - start > *budget.time_limit)
            return true;
        return false;
    };

    auto offer = [&](IndexedGroup&& g) {
        if (!seen.insert(g.bits).second)
            return;
        auto key = invariant_key(sym, g);
        auto& bucket = by_key[key];
        for (int c : bucket)
            if (conjugate_indexed(sym, g, classes[c]))
                return;
        bucket.push_back(static_cast<int>(classes.size()));
        classes.push_back(std::move(g));
    };

    std::vector<int> order(sym.size());
    std::iota(order.begin(), order.end(), 0);
    if (budget.shuffle_seed) {
        std::mt19937 rng(*budget.shuffle_seed);
        std::shuffle(order.begin(), order.end(), rng);
    }

    offer(closure(sym, {}));
    for (int e : order) {
        if (e == 0)
            continue;
        offer(closure(sym, {e}));
        if (over_budget()) {
            result.complete = false;
            break;
        }
    }

    for (std::size_t c = 0; c < classes.size() && result.complete; ++c) {
        Bits done = classes[c].bits;
        const std::vector<int> base_gens = classes[c].generators;
        const std::vector<int> base_elements = classes[c].elements;
        for (int g : order) {
            if (test_bit(done, g))
                continue;
            // Mark the double coset HgH: every element of it yields the same closure.
            std::vector<int> stack{g};
            set_bit(done, g);
            while (!stack.empty()) {
                const int x = stack.back();
                stack.pop_back();
                for (int h : base_gens) {
                    for (int y : {sym.mul(h, x), sym.mul(x, h)}) {
                        if (!test_bit(done, y)) {
                            set_bit(done, y);
                            stack.push_back(y);
                        }
                    }
                }
            }
            std::vector<int> gens = base_gens;
            gens.push_back(g);
            offer(closure(sym, std::move(gens)));
            if (over_budget()) {
                result.complete = false;
                break;
            }
        }
    }

    for (const auto& c : classes) {
        PermGroup g;
        g.degree = degree;
        for (int gen : c.generators)
            g.generators.push_back(sym.to_perm(gen));
        if (g.generators.empty())
            g.generators.push_back(Permutation::identity(degree));
        for (int e : c.elements)
            g.elements.push_back(sym.to_perm(e));
        std::sort(g.elements.begin(), g.elements.end());
        result.representatives.push_back(std::move(g));
    }
    std::sort(result.representatives.begin(), result.representatives.end(),
              [](const PermGroup& a, const PermGroup& b) {
                  if (a.order() != b.order())
                      return a.order() < b.order();
                  return a.elements < b.elements;
              });
    return result;
}

}  // namespace symcone
