// One PASS/FAIL line per acceptance criterion.
//
// Exit status is 0 once every requested criterion has produced a verdict, so a
// faithful FAIL does not break the test run; --strict turns any FAIL into 1.
#include <iostream>

#include "CLI11.hpp"
#include "symcone/verification.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"acceptance checks"};
    std::vector<int> only;
    bool strict = false, verbose = false;
    symcone::AcceptanceOptions opt;
    app.add_option("--only", only, "criterion numbers");
    app.add_option("--instances", opt.property_instances, "instances per property suite");
    app.add_flag("--strict", strict, "exit 1 if any criterion fails");
    app.add_flag("-v,--verbose", verbose, "print details for passing criteria too");
    CLI11_PARSE(app, argc, argv);
    opt.only.insert(only.begin(), only.end());

    const auto results = symcone::run_acceptance(opt);
    std::cout << symcone::format_results(results, verbose) << std::flush;
    int failed = 0;
    for (const auto& r : results)
        failed += !r.pass;
    std::cout << results.size() - failed << "/" << results.size() << " criteria pass\n";
    const std::size_t expected = opt.only.empty() ? 8 : opt.only.size();
    if (results.size() != expected)
        return 2;
    return strict && failed ? 1 : 0;
}
