#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "f4r/bitvec.hpp"
#include "f4r/errors.hpp"
#include "f4r/f4.hpp"
#include "f4r/poly.hpp"
#include "f4r/ring.hpp"

namespace f4r {

// Shape of the mixed space F4^alpha x R^beta.
struct Ambient {
    size_t alpha = 0;
    size_t beta = 0;

    size_t length() const { return alpha + beta; }
    size_t gray_length() const { return alpha + 2 * beta; }
    // Bit expansion width: 2 bits per F4 coordinate, 4 per R coordinate.
    size_t nbits() const { return 2 * alpha + 4 * beta; }
    bool valid() const { return alpha + beta >= 1; }

    friend bool operator==(Ambient, Ambient) = default;
};

// A word in F4^alpha x R^beta.
class Word {
  public:
    Word() = default;
    explicit Word(Ambient amb) : amb_(amb), f4_(amb.alpha, F4::zero()), r_(amb.beta, R::zero()) {}
    Word(std::vector<F4> f4_block, std::vector<R> r_block)
        : amb_{f4_block.size(), r_block.size()}, f4_(std::move(f4_block)), r_(std::move(r_block)) {}

    const Ambient& ambient() const { return amb_; }
    const std::vector<F4>& f4_block() const { return f4_; }
    const std::vector<R>& r_block() const { return r_; }
    F4 f4(size_t i) const { return f4_[i]; }
    R r(size_t j) const { return r_[j]; }
    void set_f4(size_t i, F4 x) { f4_[i] = x; }
    void set_r(size_t j, R x) { r_[j] = x; }

    bool is_zero() const {
        for (F4 x : f4_)
            if (!x.is_zero()) return false;
        for (R x : r_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Word operator+(Word x, const Word& y) {
        if (x.amb_ != y.amb_) throw PreconditionError("word addition: ambient mismatch");
        for (size_t i = 0; i < x.f4_.size(); ++i) x.f4_[i] += y.f4_[i];
        for (size_t j = 0; j < x.r_.size(); ++j) x.r_[j] += y.r_[j];
        return x;
    }
    friend bool operator==(const Word&, const Word&) = default;

    BitVec to_bits() const {
        BitVec v(amb_.nbits());
        for (size_t i = 0; i < amb_.alpha; ++i) {
            const uint8_t c = f4_[i].code();
            if (c & 1u) v.set(2 * i, true);
            if (c & 2u) v.set(2 * i + 1, true);
        }
        const size_t off = 2 * amb_.alpha;
        for (size_t j = 0; j < amb_.beta; ++j) {
            const uint8_t c = r_[j].code();
            for (unsigned t = 0; t < 4; ++t)
                if (c & (1u << t)) v.set(off + 4 * j + t, true);
        }
        return v;
    }

    static Word from_bits(Ambient amb, const BitVec& v) {
        Word w(amb);
        for (size_t i = 0; i < amb.alpha; ++i) {
            uint8_t c = 0;
            if (v.get(2 * i)) c |= 1u;
            if (v.get(2 * i + 1)) c |= 2u;
            w.f4_[i] = F4(c);
        }
        const size_t off = 2 * amb.alpha;
        for (size_t j = 0; j < amb.beta; ++j) {
            uint8_t c = 0;
            for (unsigned t = 0; t < 4; ++t)
                if (v.get(off + 4 * j + t)) c |= static_cast<uint8_t>(1u << t);
            w.r_[j] = R::from_code(c);
        }
        return w;
    }

  private:
    Ambient amb_;
    std::vector<F4> f4_;
    std::vector<R> r_;
};

// Module action d * x: the F4 block is scaled by eta(d), the R block by d.
Word scalar_mul(R d, const Word& x);
// F4 scalar action: c on the F4 block and c (embedded in R) on the R block.
Word scalar_mul(F4 c, const Word& x);

// T_theta: cyclic shift; theta is applied on the R block only.
Word skew_shift(const Word& x);
// T: plain cyclic shift of both blocks.
Word plain_shift(const Word& x);
// Twisted shift applying the ring automorphism on both blocks (Frobenius on
// the F4 block). On a pure F4 ambient this is the skew-cyclic shift of an
// F4 code; on a pure R ambient it coincides with skew_shift.
Word frob_shift(const Word& x);

// <x, y> = v * sum a_i d_i + sum b_j e_j, a value in R.
R inner_product(const Word& x, const Word& y);

// wt_H on the F4 block plus wt_L on the R block.
unsigned mixed_weight(const Word& x);

// Gray map phi: (x, y) -> (x, a+b, a), a word in F4^{alpha+2beta}.
Word gray_word(const Word& x);

// Module action of a skew polynomial: (eta(r) a(X) mod X^alpha-1, r b(X) mod
// X^beta-1). Acting by X equals one application of skew_shift.
Word polynomial_action(const Poly<R>& r, const Word& c);

// Space-separated symbols, the two blocks joined by " | " when both present.
std::string to_string(const Word& x);

}  // namespace f4r
