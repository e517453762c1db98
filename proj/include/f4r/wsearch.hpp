#pragma once

#include <cstdint>
#include <optional>

#include "f4r/code.hpp"

namespace f4r {

// Low-weight codeword search for pure F4 codes, used to certify distance
// upper bounds (and, when a complete stage finishes, exact distances).
struct WitnessOptions {
    uint64_t seed = 1;
    // Full-span Gray-code enumeration is used when |C| <= exact_cap.
    uint64_t exact_cap = uint64_t(1) << 20;
    // Complete enumeration of candidate supports runs while the candidate
    // count stays under this budget.
    uint64_t support_budget = 4000000;
    unsigned isd_iterations_p2 = 1500;
    unsigned isd_iterations_p3 = 250;
};

struct WitnessResult {
    // Smallest weight found; ~0u when no nonzero codeword of weight <=
    // target was found by any stage.
    unsigned weight = ~0u;
    std::optional<Word> word;
    // True when a complete stage ran: weight is then the exact minimum
    // distance (or, if weight == ~0u, the minimum provably exceeds target).
    bool proven = false;
    const char* method = "none";

    bool found_leq(unsigned target) const { return weight != ~0u && weight <= target; }
};

WitnessResult find_low_weight_codeword(const Code& c, unsigned target, const WitnessOptions& opts = {});

}  // namespace f4r
