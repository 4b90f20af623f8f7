// Acceptance gate: runs every catalog criterion and prints one PASS/FAIL
// line each.  Pass --long to include the two long-running checks; exit
// status is 0 only when everything that ran passed.

#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>

#include "mutviz/verification.hpp"

int main(int argc, char** argv) {
    mutviz::VerificationOptions opts;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--long") == 0) {
            opts.include_long = true;
        } else if (std::strcmp(argv[i], "--parallel") == 0 && i + 1 < argc) {
            opts.parallel = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: " << argv[0] << " [--long] [--parallel N]\n";
            return 2;
        }
    }

    opts.on_result = [](const mutviz::CriterionResult& r) {
        char head[16];
        std::snprintf(head, sizeof head, "[%2d] ", r.id);
        std::string name = r.name;
        if (name.size() < 28) name.resize(28, ' ');
        std::cout << head << name << " "
                  << (r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL") << "\n";
        if (!r.detail.empty()) std::cout << "     " << r.detail << "\n";
        std::cout.flush();
        std::cerr << "criterion " << r.id << ": " << r.seconds << "s\n";
    };

    auto results = mutviz::run_verification(opts);
    const bool ok = mutviz::all_passed(results);
    std::cout << (ok ? "acceptance: all criteria passed"
                     : "acceptance: criteria FAILED")
              << "\n";
    return ok ? 0 : 1;
}
