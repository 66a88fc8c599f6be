#include "symcone/common.hpp"

#include <algorithm>
#include <cctype>

namespace symcone {

std::vector<int> mask_points(Mask m)
{
    std::vector<int> out;
    for (int i = 1; m != 0; ++i, m >>= 1)
        if (m & 1u)
            out.push_back(i);
    return out;
}

Mask mask_from_points(const std::vector<int>& points)
{
    Mask m = 0;
    for (int p : points) {
        if (p < 1 || p > 32)
            throw std::out_of_range("point " + std::to_string(p) + " outside 1..32");
        m |= point_bit(p);
    }
    return m;
}

std::string mask_to_string(Mask m)
{
    std::string out = "{";
    bool first = true;
    for (int p : mask_points(m)) {
        if (!first)
            out += ',';
        out += std::to_string(p);
        first = false;
    }
    return out + "}";
}

std::string mask_label(Mask m)
{
    const auto pts = mask_points(m);
    const bool wide = !pts.empty() && pts.back() > 9;
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (wide && i > 0)
            out += ',';
        out += std::to_string(pts[i]);
    }
    return out.empty() ? "0" : out;
}

Mask parse_mask(const std::string& text)
{
    const bool separated = text.find_first_of(", ") != std::string::npos;
    Mask m = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '{' || c == '}' || c == ',' || c == ' ') {
            ++i;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("unexpected character '" + std::string(1, c) + "' in subset", i);
        int value = 0;
        if (separated) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                value = value * 10 + (text[i++] - '0');
        } else {
            value = text[i++] - '0';
        }
        if (value < 1 || value > 31)
            throw ParseError("point " + std::to_string(value) + " out of range in subset", i);
        m |= point_bit(value);
    }
    return m;
}

bool mask_canonical_less(Mask a, Mask b)
{
    const int ca = cardinality(a), cb = cardinality(b);
    if (ca != cb)
        return ca < cb;
    // Same cardinality: compare sorted point lists. The first differing
    // point decides; the set holding the smaller point is smaller.
    const Mask diff = a ^ b;
    if (diff == 0)
        return false;
    const Mask lowest = diff & (~diff + 1);
    return (a & lowest) != 0;
}

}  // namespace symcone
