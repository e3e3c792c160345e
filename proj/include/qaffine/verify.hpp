#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qaffine/blocks.hpp"

namespace qaffine {

// The sigma_Q sets written out per family, independent of the Q-datum machinery.
std::set<SigmaPoint> listed_sigma_q(const AffineData& d);

// Lists whose classes generate the kernel of the projection onto W (untwisted types),
// translated by t.
std::vector<AffineWeightList> kernel_generators(const AffineData& d, SpectralScalar t);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

inline constexpr int kCriterionCount = 11;
inline constexpr std::uint64_t kDefaultSeed = 20240611;

CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed);

}  // namespace qaffine
