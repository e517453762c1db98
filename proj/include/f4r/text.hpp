#pragma once

#include <string>
#include <string_view>

#include "f4r/f4.hpp"
#include "f4r/ring.hpp"

namespace f4r {

// Text grammar for constants.
//
// F4 elements render as  0, 1, w, w^2  and R elements as minimal "a+v*b"
// combinations, e.g. "v", "v*w", "1+v", "w+v*w^2". Parsing ignores
// whitespace, accepts "w2" as an alias for "w^2", and accepts one pair of
// enclosing parentheses.
std::string to_string(F4 x);
std::string to_string(R x);

F4 parse_f4(std::string_view text);
R parse_r(std::string_view text);

}  // namespace f4r
