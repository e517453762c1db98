#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "f4r/f4.hpp"

namespace f4r {

namespace detail {

// (a+vb)(c+vd) = ac + v(ad+bc) + v^2(bd), with the v^2 = v reduction
// folding the last term into the v coefficient.
constexpr std::array<std::array<uint8_t, 16>, 16> make_r_mul_table() {
    std::array<std::array<uint8_t, 16>, 16> t{};
    for (unsigned x = 0; x < 16; ++x) {
        for (unsigned y = 0; y < 16; ++y) {
            const F4 a(static_cast<uint8_t>(x & 3u)), b(static_cast<uint8_t>(x >> 2));
            const F4 c(static_cast<uint8_t>(y & 3u)), d(static_cast<uint8_t>(y >> 2));
            const F4 constant = a * c;
            const F4 vcoeff = a * d + b * c + b * d;
            t[x][y] = static_cast<uint8_t>(constant.code() | (vcoeff.code() << 2));
        }
    }
    return t;
}

inline constexpr std::array<std::array<uint8_t, 16>, 16> r_mul_table = make_r_mul_table();

constexpr std::array<uint8_t, 16> make_r_inv_table() {
    std::array<uint8_t, 16> inv{};
    for (unsigned x = 0; x < 16; ++x)
        for (unsigned y = 0; y < 16; ++y)
            if (r_mul_table[x][y] == 1) inv[x] = static_cast<uint8_t>(y);
    return inv;
}

inline constexpr std::array<uint8_t, 16> r_inv_table = make_r_inv_table();

}  // namespace detail

// The commutative ring R = F4 + vF4 with v^2 = v (16 elements, non-chain,
// maximal ideals <v> and <v+1>).
//
// An element a + vb is stored as the pair (a, b) and serialized as the 4-bit
// code 4*code(b) + code(a). Addition is XOR of codes; multiplication uses a
// 16x16 table generated from the defining relation.
class R {
  public:
    static constexpr unsigned size = 16;

    constexpr R() = default;
    constexpr R(F4 a, F4 b) : code_(static_cast<uint8_t>(a.code() | (b.code() << 2))) {}

    static constexpr R from_code(uint8_t code) {
        R x;
        x.code_ = static_cast<uint8_t>(code & 15u);
        return x;
    }
    static constexpr R zero() { return R(); }
    static constexpr R one() { return R(F4::one(), F4::zero()); }
    static constexpr R v() { return R(F4::zero(), F4::one()); }
    static constexpr R from_f4(F4 a) { return R(a, F4::zero()); }

    constexpr uint8_t code() const { return code_; }
    constexpr F4 a() const { return F4(static_cast<uint8_t>(code_ & 3u)); }
    constexpr F4 b() const { return F4(static_cast<uint8_t>(code_ >> 2)); }
    constexpr bool is_zero() const { return code_ == 0; }

    friend constexpr R operator+(R x, R y) { return from_code(static_cast<uint8_t>(x.code_ ^ y.code_)); }
    friend constexpr R operator*(R x, R y) { return from_code(detail::r_mul_table[x.code_][y.code_]); }
    constexpr R& operator+=(R y) {
        code_ ^= y.code_;
        return *this;
    }
    constexpr R& operator*=(R y) {
        *this = *this * y;
        return *this;
    }
    friend constexpr bool operator==(R x, R y) = default;

    // Units are exactly the elements with both CRT components nonzero.
    constexpr bool is_unit() const { return !(a() + b()).is_zero() && !a().is_zero(); }

    constexpr R inverse() const {
        if (!is_unit()) throw std::domain_error("R: inverse of non-unit");
        return from_code(detail::r_inv_table[code_]);
    }

  private:
    uint8_t code_ = 0;
};

// The order-2 ring automorphism a + vb -> a^2 + (v+1) b^2.
// Expanded over the (a, b) pair: (a^2 + b^2) + v b^2.
constexpr R theta(R x) {
    const F4 asq = x.a().square(), bsq = x.b().square();
    return R(asq + bsq, bsq);
}

// The projection homomorphism R -> F4, a + vb -> a.
constexpr F4 eta(R x) { return x.a(); }

// Image of an R element under the coordinatewise Gray map phi*.
struct GrayPair {
    F4 first;   // a + b
    F4 second;  // a
    friend constexpr bool operator==(GrayPair, GrayPair) = default;
};

constexpr GrayPair gray_star(R x) { return GrayPair{x.a() + x.b(), x.a()}; }

// Lee weight = Hamming weight of the Gray pair; one of {0, 1, 2}.
constexpr unsigned lee_weight(R x) {
    const GrayPair p = gray_star(x);
    return hamming_weight(p.first) + hamming_weight(p.second);
}

// CRT coordinates: x = p*v + q*(v+1) with p = a + b, q = a.
constexpr std::pair<F4, F4> crt_decompose(R x) { return {x.a() + x.b(), x.a()}; }

constexpr R crt_compose(F4 p, F4 q) { return R(q, p + q); }

}  // namespace f4r
