// Acceptance gate: runs every suite and prints one pass/fail line per
// criterion. Exit status is nonzero if any criterion fails.
#include <cstdio>
#include <thread>

#include "hampreserve/suites.hpp"

int main() {
    int jobs = int(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    bool all_pass = true;
    int crit = 0;
    for (const std::string& name : hp::suite_names()) {
        ++crit;
        hp::SuiteResult r;
        try {
            r = hp::run_suite(name, 0, 1, jobs);
        } catch (const std::exception& e) {
            r.name = name;
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %d [%s]: %s (checked=%lld failures=%lld, %.1fs)%s%s\n",
                    crit, r.name.c_str(), r.pass ? "pass" : "FAIL", r.checked,
                    r.failures, r.seconds, r.detail.empty() ? "" : " — ",
                    r.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}
