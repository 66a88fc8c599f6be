#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "symcone/certificates.hpp"

namespace symcone {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::vector<std::string> details;
    double seconds = 0;
};

struct AcceptanceOptions {
    std::set<int> only;              // empty: every criterion
    int property_instances = 200;    // per property suite
    unsigned seed = 20240611;
    bool enumerate_subgroups = true; // criterion 7 in enumeration mode
    bool verbose = false;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

/// "PASS <id> <title>" / "FAIL <id> <title>" lines, details indented below when verbose.
std::string format_results(const std::vector<CriterionResult>& results, bool verbose);

// Random instances for the property suites.

/// Random matrix over GF(p) with `width` columns per point.
GFMatrix random_matrix(int n, int rows, int width, int p, std::mt19937& rng);
/// Nonnegative integer combination of random representable rank functions.
RankFunction random_polymatroid(int n, std::mt19937& rng);

}  // namespace symcone
