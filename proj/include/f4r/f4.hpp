#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace f4r {

namespace detail {

// (b0 + b1 w)(c0 + c1 w) = b0c0 + (b0c1 + b1c0) w + b1c1 w^2,
// reduced with the defining relation w^2 = 1 + w.
constexpr std::array<std::array<uint8_t, 4>, 4> make_f4_mul_table() {
    std::array<std::array<uint8_t, 4>, 4> t{};
    for (unsigned x = 0; x < 4; ++x) {
        for (unsigned y = 0; y < 4; ++y) {
            const unsigned b0 = x & 1u, b1 = (x >> 1) & 1u;
            const unsigned c0 = y & 1u, c1 = (y >> 1) & 1u;
            const unsigned r = b1 & c1;
            const unsigned p0 = (b0 & c0) ^ r;
            const unsigned p1 = (b0 & c1) ^ (b1 & c0) ^ r;
            t[x][y] = static_cast<uint8_t>(p0 | (p1 << 1));
        }
    }
    return t;
}

inline constexpr std::array<std::array<uint8_t, 4>, 4> f4_mul_table = make_f4_mul_table();

constexpr std::array<uint8_t, 4> make_f4_inv_table() {
    std::array<uint8_t, 4> inv{};
    for (unsigned x = 1; x < 4; ++x)
        for (unsigned y = 1; y < 4; ++y)
            if (f4_mul_table[x][y] == 1) inv[x] = static_cast<uint8_t>(y);
    return inv;
}

inline constexpr std::array<uint8_t, 4> f4_inv_table = make_f4_inv_table();

}  // namespace detail

// The field GF(4) = {0, 1, w, w^2} with w^2 = w + 1, characteristic 2.
//
// Elements carry a 2-bit code in the fixed order 0, 1, w, w^2. The code is
// the coordinate vector over GF(2) with respect to the basis {1, w}, so
// addition is plain XOR of codes. Multiplication goes through a 4x4 table
// generated from the defining relation.
class F4 {
  public:
    static constexpr unsigned size = 4;

    constexpr F4() = default;
    constexpr explicit F4(uint8_t code) : code_(static_cast<uint8_t>(code & 3u)) {}

    static constexpr F4 zero() { return F4(0); }
    static constexpr F4 one() { return F4(1); }
    static constexpr F4 w() { return F4(2); }
    static constexpr F4 w2() { return F4(3); }
    static constexpr F4 from_code(uint8_t code) { return F4(code); }

    constexpr uint8_t code() const { return code_; }
    constexpr bool is_zero() const { return code_ == 0; }

    friend constexpr F4 operator+(F4 x, F4 y) { return F4(static_cast<uint8_t>(x.code_ ^ y.code_)); }
    friend constexpr F4 operator*(F4 x, F4 y) { return F4(detail::f4_mul_table[x.code_][y.code_]); }
    constexpr F4& operator+=(F4 y) {
        code_ ^= y.code_;
        return *this;
    }
    constexpr F4& operator*=(F4 y) {
        *this = *this * y;
        return *this;
    }
    friend constexpr bool operator==(F4 x, F4 y) = default;

    // Frobenius map x -> x^2, the nontrivial automorphism of GF(4).
    // It fixes 0 and 1 and swaps w and w^2.
    constexpr F4 square() const { return *this * *this; }

    constexpr F4 inverse() const {
        if (is_zero()) throw std::domain_error("F4: inverse of zero");
        return F4(detail::f4_inv_table[code_]);
    }

  private:
    uint8_t code_ = 0;
};

constexpr F4 theta(F4 x) { return x.square(); }

constexpr unsigned hamming_weight(F4 x) { return x.is_zero() ? 0u : 1u; }

}  // namespace f4r
