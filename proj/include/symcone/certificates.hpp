#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symcone/polymatroid.hpp"

namespace symcone {

// Zhang-Yeung, with roles X1..X4:
//   2 I(3;4) <= I(1;2) + I(1;34) + 3 I(3;4|1) + I(3;4|2).
// E(h) is the right side minus the left; entropic h has E(h) >= 0.
struct ZYTerm {
    Mask roles;  // bit r-1 set for role X_r
    int coefficient;
};
extern const std::array<ZYTerm, 11> kZhangYeungTerms;

/// roles[r] is the ground point (1..4) playing X_{r+1}.
Rational zy_value(const RankFunction& h, const std::array<int, 4>& roles);

struct ZYCertificate {
    Mask contract_set = 0;         // original labels
    Mask restrict_set = 0;         // original labels, four points
    std::array<int, 4> roles{};    // original label of X1..X4
    Rational value;
};

/// Minimum of zy_value over role assignments of one minor, up to the 3<->4 symmetry.
ZYCertificate zy_minor(const RankFunction& h, Mask contract_set, Mask restrict_set);

/// Searches every minor contract(X) then restrict(Y), |Y| = 4, for the most
/// negative value; returns it if negative.
std::optional<ZYCertificate> zy_violation_search(const RankFunction& h);

std::string describe(const ZYCertificate& c);

/// Matrix over GF(p) whose columns are grouped into one block per ground element.
struct GFMatrix {
    int p = 2;
    int rows = 0;
    int cols = 0;
    std::vector<int> entries;               // row-major, in [0, p)
    std::vector<std::vector<int>> blocks;   // blocks[i-1] = columns of point i
    std::string name;

    int at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
    int degree() const { return static_cast<int>(blocks.size()); }
    std::vector<int> columns_of(Mask a) const;
    void validate() const;
};

bool is_prime(int p);

int gf_rank(const GFMatrix& m, const std::vector<int>& columns);
int gf_rank(const GFMatrix& m, Mask points);

/// Rank function A -> rank of the columns of A's blocks.
RankFunction rank_function(const GFMatrix& m);

struct RepresentationReport {
    bool ok = true;
    std::optional<Mask> mismatch;
    int expected = 0;
    int actual = 0;
    explicit operator bool() const { return ok; }
};

RepresentationReport verify_multilinear_rep(const GFMatrix& m, const RankFunction& h);

enum class RayStatusKind { AlmostEntropic, NonEntropic, Unknown };

struct RayStatus {
    RayStatusKind kind = RayStatusKind::Unknown;
    std::string reason;
    std::optional<ZYCertificate> zy;
    // For matrix evidence: the relabeling sigma and scale c with h(sigma(A)) = c * rank(A).
    std::optional<Permutation> relabeling;
    Rational scale;
};

std::string to_string(RayStatusKind k);

/// Matches h against c * rank(M) after relabeling the points of M by some sigma.
std::optional<std::pair<Permutation, Rational>> match_representation(const GFMatrix& m, const RankFunction& h);

/// Uniform recognition, then each matrix (up to relabeling and scaling), then ZY search.
RayStatus certify_ray(const OrbitStructure& s, const IntVector& ray, const std::vector<GFMatrix>& evidence = {});

/// Looks for a GF(2) representation with k = h({i}) columns per point that is
/// equivariant under an n-cycle automorphism sigma of h: point sigma^i(1) gets
/// T^i V for some T in GL(h(N), 2) with T^n = 1.
/// Gives up after `budget` candidate blocks V.
std::optional<GFMatrix> search_cyclic_representation(const RankFunction& h, std::uint64_t budget = std::uint64_t{1} << 24);

// Constructions used to assemble representations from known pieces.

/// Lines of a Fano plane: seven 3-subsets of {1..7}, any two meeting in one point.
bool is_fano_line_set(const std::vector<Mask>& lines);
/// 3 x 7 GF(2) matrix whose dependent triples are exactly `lines`, found by
/// assigning the nonzero vectors of GF(2)^3 to the points.
std::optional<GFMatrix> fano_representation(const std::vector<Mask>& lines);
/// Every Fano line set whose lines are all drawn from `triples`, in lexicographic order.
std::vector<std::vector<Mask>> fano_planes_within(const std::vector<Mask>& triples);
/// Rank function of the Fano matroid on the given lines: min(|A|, 3), lines 2.
RankFunction fano_rank(const std::vector<Mask>& lines);
/// Representation of the dual matroid of a one-column-per-point GF(p) matrix.
GFMatrix dual_representation(const GFMatrix& m);
/// Block-diagonal matrix; point i gets the union of its blocks in a and b.
GFMatrix direct_sum(const GFMatrix& a, const GFMatrix& b);

}  // namespace symcone
