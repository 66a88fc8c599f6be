#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symcone/common.hpp"

namespace symcone {

/// A bijection of {1..n}, stored by images with 1-based points.
///
/// Composition convention: `compose(p, q)` (also `p * q`) applies q first,
/// so (p * q)(i) = p(q(i)). Every module uses this convention.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int degree);  // identity
    Permutation(int degree, const std::vector<int>& images);

    static Permutation identity(int degree) { return Permutation(degree); }

    int degree() const { return degree_; }
    int operator()(int point) const { return images_[point - 1]; }
    std::vector<int> images() const;

    bool is_identity() const;
    Permutation inverse() const;
    Mask apply(Mask subset) const;
    int order() const;

    /// Cycle lengths sorted descending, fixed points included.
    std::vector<int> cycle_type() const;
    /// Disjoint cycle notation, fixed points omitted; "()" for identity.
    std::string to_cycle_string() const;

    std::uint64_t hash_key() const;

    friend bool operator==(const Permutation& a, const Permutation& b)
    {
        return a.degree_ == b.degree_ && a.images_ == b.images_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b)
    {
        if (a.degree_ != b.degree_)
            return a.degree_ < b.degree_;
        return a.images_ < b.images_;
    }

private:
    int degree_ = 0;
    std::array<std::uint8_t, kMaxDegree> images_{};
};

Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// Parses disjoint-cycle notation. Single-digit points may be juxtaposed
/// ("(123)(456)"); otherwise separate with commas or spaces ("(1,2,10)").
/// The empty string is the identity. Throws ParseError.
Permutation parse_perm(const std::string& text, int degree);

/// Splits a generator list such as "(123)(456),(14623)" into cycle strings.
std::vector<std::string> split_generators(const std::string& text);

/// Finitely generated subgroup of S_n with its full element list.
struct PermGroup {
    int degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;  // sorted
    std::string name;

    std::size_t order() const { return elements.size(); }
    bool contains(const Permutation& p) const;
    std::string generator_string() const;
};

/// Breadth-first closure of the generators under composition.
PermGroup group_closure(const std::vector<Permutation>& generators, std::string name = {});
PermGroup group_from_string(const std::string& generators, int degree, std::string name = {});

/// Multiset of element cycle types, used as a conjugacy invariant.
std::vector<std::pair<std::vector<int>, int>> cycle_type_profile(const PermGroup& g);

/// Returns sigma with sigma * G * sigma^-1 == H, or nothing. Degree <= 9.
std::optional<Permutation> are_conjugate(const PermGroup& g, const PermGroup& h);

/// All permutations of degree n in lexicographic image order.
std::vector<Permutation> all_permutations(int n);

struct EnumerationBudget {
    std::optional<std::chrono::milliseconds> time_limit;
    std::optional<std::size_t> max_classes;
    // Shuffles the order in which candidate elements are tried.
    std::optional<unsigned> shuffle_seed;
};

struct SubgroupClasses {
    int degree = 0;
    std::vector<PermGroup> representatives;
    bool complete = true;
};

/// One representative per conjugacy class of subgroups of S_degree, degree <= 7.
///
/// Seeds with the cyclic subgroups, then extends every class representative H
/// by one element g outside H, taking closure(H, g). Elements of one double
/// coset HgH give the same closure, so one g per double coset suffices.
/// New groups are deduplicated by (order, cycle-type profile) and then by an
/// explicit conjugacy search. Representatives are returned sorted by order and
/// then by their sorted element list.
SubgroupClasses enumerate_subgroup_classes(int degree, const EnumerationBudget& budget = {});

}  // namespace symcone
