#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fmz {

struct SelftestCheck {
    std::string suite;
    std::string name;
    bool passed = true;
    std::string detail;  // first counterexample when failed
};

const std::vector<std::string>& selftest_suites();

// Runs the named suites (all when empty) with `samples` random cases per identity.
std::vector<SelftestCheck> run_selftest(const std::vector<std::string>& suites, std::uint64_t seed, int samples);

}  // namespace fmz
