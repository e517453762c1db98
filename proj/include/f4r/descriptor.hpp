#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "f4r/code.hpp"

namespace f4r {

// JSON build descriptor.
//
// kind selects the construction:
//   "f4r"       - mixed code from generators (f, 0) and (ell, v g1 + (v+1) g2),
//                 closed under R-scalars and T_theta (the default);
//   "f4_cyclic" - pure F4 cyclic code of length alpha from generator f;
//   "f4_skew"   - pure F4 skew cyclic code of length alpha from generator f.
// Any polynomial may be "0"; for g1/g2 that denotes the zero component
// (equivalently X^beta - 1). raw_generators (hex bit expansions) are mixed
// into the closure; operators overrides the closure operator set.
struct CodeDescriptor {
    std::string kind = "f4r";
    size_t alpha = 0;
    size_t beta = 0;
    std::string f = "0";
    std::string ell = "0";
    std::string g1 = "0";
    std::string g2 = "0";
    std::vector<std::string> raw_generators;
    std::optional<std::vector<std::string>> operators;
    std::optional<uint64_t> cap;
    std::optional<uint64_t> seed;
};

CodeDescriptor descriptor_from_json(const nlohmann::json& j);
nlohmann::ordered_json descriptor_to_json(const CodeDescriptor& d);

Code build_descriptor(const CodeDescriptor& d);

// Artifact files: canonical RREF basis rows (hex bit expansion) plus shape
// and verified closure flags.
nlohmann::ordered_json artifact_to_json(const Code& c);
Code artifact_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace f4r
