// Runs every acceptance criterion at full size and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.
#include <iostream>

#include "gpade/acceptance.hpp"

int main()
{
    bool all = true;
    for (const auto& r : gpade::run_acceptance(false)) {
        std::cout << gpade::format_criterion(r) << '\n';
        all = all && r.passed;
    }
    std::cout << (all ? "acceptance PASS" : "acceptance FAIL") << '\n';
    return all ? 0 : 1;
}
