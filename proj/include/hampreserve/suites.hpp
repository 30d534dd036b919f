#ifndef HAMPRESERVE_SUITES_HPP
#define HAMPRESERVE_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hp {

struct SuiteResult {
    std::string name;
    bool pass = false;
    long long checked = 0;
    long long failures = 0;
    std::string detail;
    double seconds = 0.0;
};

/// The nine acceptance suites, in criterion order.
std::vector<std::string> suite_names();

/// Runs one suite. trials = 0 selects the suite's specified default; seed
/// feeds the per-trial generators; jobs parallelizes independent trials.
SuiteResult run_suite(const std::string& name, int trials, uint64_t seed,
                      int jobs);

}  // namespace hp

#endif
