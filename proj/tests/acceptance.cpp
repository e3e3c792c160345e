// Acceptance suite: one PASS/FAIL line per criterion.
#include <cstdio>
#include <cstdlib>

#include "qaffine/verify.hpp"

int main(int argc, char** argv)
{
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : qaffine::kDefaultSeed;
    int failed = 0;
    for (const auto& r : qaffine::run_acceptance(seed)) {
        std::printf("%s %2d  %-52s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                    r.detail.c_str());
        failed += r.pass ? 0 : 1;
    }
    std::printf("%d/%d criteria passed (seed %llu)\n", qaffine::kCriterionCount - failed, qaffine::kCriterionCount,
                static_cast<unsigned long long>(seed));
    return failed == 0 ? 0 : 1;
}
