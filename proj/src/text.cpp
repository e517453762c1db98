#include "f4r/text.hpp"

#include <algorithm>
#include <cctype>

#include "f4r/errors.hpp"

namespace f4r {

namespace {

std::string strip_spaces(std::string_view sv) {
    std::string out;
    out.reserve(sv.size());
    for (char c : sv)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

// Removes one pair of enclosing parentheses if they match each other.
std::string_view strip_parens(std::string_view s) {
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool wraps = true;
        for (size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (depth == 0) {
                wraps = false;
                break;
            }
        }
        if (!wraps) break;
        s = s.substr(1, s.size() - 2);
    }
    return s;
}

F4 parse_f4_atom(std::string_view s) {
    if (s == "0") return F4::zero();
    if (s == "1") return F4::one();
    if (s == "w") return F4::w();
    if (s == "w^2" || s == "w2") return F4::w2();
    throw ParseError("not an F4 constant: '" + std::string(s) + "'");
}

}  // namespace

std::string to_string(F4 x) {
    switch (x.code()) {
        case 0: return "0";
        case 1: return "1";
        case 2: return "w";
        default: return "w^2";
    }
}

std::string to_string(R x) {
    const F4 a = x.a(), b = x.b();
    if (b.is_zero()) return to_string(a);
    std::string vpart = b == F4::one() ? "v" : "v*" + to_string(b);
    if (a.is_zero()) return vpart;
    return to_string(a) + "+" + vpart;
}

F4 parse_f4(std::string_view text) {
    const std::string s = strip_spaces(text);
    return parse_f4_atom(strip_parens(s));
}

R parse_r(std::string_view text) {
    const std::string buf = strip_spaces(text);
    std::string_view s = strip_parens(buf);
    if (s.empty()) throw ParseError("empty R constant");
    F4 a = F4::zero(), b = F4::zero();
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find('+', pos);
        if (next == std::string_view::npos) next = s.size();
        std::string_view part = s.substr(pos, next - pos);
        if (part.empty()) throw ParseError("malformed R constant: '" + std::string(s) + "'");
        if (part.front() == 'v') {
            std::string_view rest = part.substr(1);
            if (rest.empty())
                b += F4::one();
            else if (rest.front() == '*')
                b += parse_f4_atom(rest.substr(1));
            else
                throw ParseError("malformed v-term: '" + std::string(part) + "'");
        } else {
            a += parse_f4_atom(part);
        }
        if (next == s.size()) break;
        pos = next + 1;
    }
    return R(a, b);
}

}  // namespace f4r
