#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "digitop/image.hpp"

namespace digitop {

struct CheckResult {
    std::string id;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct VerifyOptions {
    std::string corpus8; ///< graph6 file of connected 8-point graphs (optional)
    std::string corpus9; ///< graph6 file of connected 9-point graphs (optional)
    std::uint64_t seed = 20240802;
    int jobs = 1;
    std::uint64_t map_budget = 1'000'000;
    std::uint64_t candidate_budget = 50'000'000;
};

/// Runs the built-in verification suite: census counts, the small
/// survivor catalog, cycle homology and rigidity, the prism identity,
/// strong-homotopy invariance of induced maps, selfmap classification on
/// cycles, the eight-point pointed example, and the property suites.
/// Corpus-backed checks are skipped (not failed) when no corpus is given.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

/// The eight-point image of two nested squares joined by diagonals:
/// strongly contractible, but every nonidentity map strongly homotopic
/// to the identity in one step must move vertex 0.
DigitalImage nested_squares_image();

} // namespace digitop
