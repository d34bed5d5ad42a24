#include "trivext/suite.h"

#include <fmt/core.h>

#include <algorithm>
#include <cstdlib>
#include <cstring>

int main(int argc, char** argv)
{
    bool verbose = false;
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "-v") == 0)
            verbose = true;
        else
            only.push_back(std::atoi(argv[i]));
    }
    trivext::suite::SuiteOptions opt;
    bool all = true;
    for (int id = 1; id <= 8; ++id) {
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end())
            continue;
        auto r = trivext::suite::criterion(id, opt);
        fmt::print("{} ({:.1f}s)\n", r.line(), r.seconds);
        if (verbose || !r.pass)
            for (auto& d : r.details)
                fmt::print("    {}\n", d);
        std::fflush(stdout);
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
