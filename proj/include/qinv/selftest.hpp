#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qinv
{

struct SuiteResult
{
    bool passed = false;
    std::string detail;
};

struct Suite
{
    std::string name;
    std::string summary;
    std::function<SuiteResult()> run;
};

/// Quick oracle and invariance checks, in the order `selftest` runs them.
const std::vector<Suite>& selftest_suites();

} // namespace qinv
