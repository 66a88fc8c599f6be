#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace symcone {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Subsets of {1..n} are bit masks: point i lives in bit i-1.
using Mask = std::uint32_t;

constexpr int kMaxDegree = 12;

inline constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }
inline constexpr Mask point_bit(int point) { return Mask{1} << (point - 1); }
inline int cardinality(Mask m) { return __builtin_popcount(m); }

// Sorted 1-based points of a mask.
std::vector<int> mask_points(Mask m);
Mask mask_from_points(const std::vector<int>& points);

// "{1,2,4}" style rendering; the empty set is "{}".
std::string mask_to_string(Mask m);
// Compact "124" label (points > 9 are comma separated).
std::string mask_label(Mask m);
// Parses "124", "{1,2,4}", "1,2,4" or "1 2 4".
Mask parse_mask(const std::string& text);

// Lexicographic order on sorted point lists, after cardinality.
bool mask_canonical_less(Mask a, Mask b);

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace symcone
