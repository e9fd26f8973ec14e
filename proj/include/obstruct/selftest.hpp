#ifndef OBSTRUCT_SELFTEST_HPP
#define OBSTRUCT_SELFTEST_HPP

#include <string>
#include <vector>

namespace obstruct::selftest {

struct SuiteResult
{
    std::string name;
    bool passed;
    std::string detail;
};

struct Options
{
    /* Replace Gauss composition by a broken law (fault injection). */
    bool corrupt_composition = false;
};

std::vector<SuiteResult> run(Options const & opts = {});

bool all_passed(std::vector<SuiteResult> const & results);

} // namespace obstruct::selftest

#endif
