#pragma once

#include "fmz/reduction.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fmz {

struct CensusOptions {
    JordanKind kind = JordanKind::Diag3;
    long height = 1;
    // 0 enumerates every element with coordinates in [-height, height].
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    int jobs = 1;
    // Elements beyond this many are skipped and the result is marked truncated.
    std::size_t max_elements = 50'000'000;
};

struct CensusRecord {
    Int norm;
    OrbitLabel label;
    Int count;
    Freud<Int> sample;
};

struct CensusResult {
    std::vector<CensusRecord> records;  // sorted by norm, then label
    std::size_t processed = 0;
    std::size_t requested = 0;
    bool truncated = false;
    // Norms whose projective elements received more than one label.
    std::vector<Int> counterexamples;
    // Elements whose norm is not 0 or 1 mod 4.
    std::size_t congruence_failures = 0;
};

CensusResult run_census(const CensusOptions& options);

// Stable text key of a label, used for bucketing and ordering.
std::string label_key(const OrbitLabel& label);

}  // namespace fmz
