// Acceptance checks: one PASS/FAIL line per criterion.
//   acceptance [--only N]

#include "hqm/selftest.hpp"

#include <cstring>
#include <iostream>
#include <string>

int main(int argc, char** argv)
{
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            only = std::stoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--only N]\n";
            return 2;
        }
    }
    bool all = true;
    for (int id = 1; id <= hqm::kCheckCount; ++id) {
        if (only && id != only)
            continue;
        const auto r = hqm::run_check(id);
        std::cout << hqm::format_check(r) << std::endl;
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
