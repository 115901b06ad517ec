// Acceptance runner: executes every criterion battery at the documented
// bounds and prints one pass/fail line per criterion.

#include <cstdio>

#include "decat/suites.hpp"

int main() {
    using namespace decat::suites;
    bool all_ok = true;
    for (int row = 1; row <= num_criteria(); ++row) {
        SuiteReport rep = run_criterion(row);
        bool ok = rep.ok();
        all_ok = all_ok && ok;
        std::printf("%s criterion %2d: %s (%.1f s)\n", ok ? "PASS" : "FAIL", row,
                    criterion_title(row).c_str(), rep.seconds);
        if (!ok) {
            for (const auto& c : rep.checks)
                if (!c.pass)
                    std::printf("      %s [%s]: %s\n", c.id.c_str(), c.params.c_str(),
                                c.witness.c_str());
        }
        std::fflush(stdout);
    }
    std::printf("%s\n", all_ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return all_ok ? 0 : 1;
}
