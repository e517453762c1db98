#pragma once

#include <cstdint>

#include <json.hpp>

#include "f4r/code.hpp"

namespace f4r {

struct VerifyOptions {
    bool full = false;  // quick: structural checks + distance witnesses; full: exact enumeration under cap
    uint64_t seed = 1;
    uint64_t cap = uint64_t(1) << 24;
};

struct VerifyOutcome {
    bool pass = false;
    nlohmann::ordered_json report;
};

// Re-verifies every catalog row: divisibility of the published generators,
// dimensions, product identities and sizes, and minimum distances (exact
// where enumerable, witness upper bounds otherwise).
VerifyOutcome verify_tables(const VerifyOptions& opts);

struct AnalyzeOptions {
    uint64_t cap = uint64_t(1) << 24;
    uint64_t sample_budget = 200000;
    uint64_t seed = 1;
};

// Structured report over one code: shape, size, closure properties,
// self-orthogonality, distance, dual and equivalence checks.
nlohmann::ordered_json analyze_code(const Code& c, const AnalyzeOptions& opts);

// Human-readable rendering of an analyze_code report, leading with the
// parameter line "[n,k,d] exact|bound".
std::string analyze_text(const nlohmann::ordered_json& report);

}  // namespace f4r
