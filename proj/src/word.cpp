#include "f4r/word.hpp"

#include "f4r/text.hpp"

namespace f4r {

Word scalar_mul(R d, const Word& x) {
    Word out = x;
    const F4 e = eta(d);
    for (size_t i = 0; i < x.ambient().alpha; ++i) out.set_f4(i, e * x.f4(i));
    for (size_t j = 0; j < x.ambient().beta; ++j) out.set_r(j, d * x.r(j));
    return out;
}

Word scalar_mul(F4 c, const Word& x) { return scalar_mul(R::from_f4(c), x); }

Word skew_shift(const Word& x) {
    const Ambient amb = x.ambient();
    Word out(amb);
    for (size_t i = 0; i < amb.alpha; ++i) out.set_f4(i, x.f4((i + amb.alpha - 1) % amb.alpha));
    for (size_t j = 0; j < amb.beta; ++j) out.set_r(j, theta(x.r((j + amb.beta - 1) % amb.beta)));
    return out;
}

Word plain_shift(const Word& x) {
    const Ambient amb = x.ambient();
    Word out(amb);
    for (size_t i = 0; i < amb.alpha; ++i) out.set_f4(i, x.f4((i + amb.alpha - 1) % amb.alpha));
    for (size_t j = 0; j < amb.beta; ++j) out.set_r(j, x.r((j + amb.beta - 1) % amb.beta));
    return out;
}

Word frob_shift(const Word& x) {
    const Ambient amb = x.ambient();
    Word out(amb);
    for (size_t i = 0; i < amb.alpha; ++i) out.set_f4(i, theta(x.f4((i + amb.alpha - 1) % amb.alpha)));
    for (size_t j = 0; j < amb.beta; ++j) out.set_r(j, theta(x.r((j + amb.beta - 1) % amb.beta)));
    return out;
}

R inner_product(const Word& x, const Word& y) {
    if (x.ambient() != y.ambient()) throw PreconditionError("inner_product: ambient mismatch");
    F4 s = F4::zero();
    for (size_t i = 0; i < x.ambient().alpha; ++i) s += x.f4(i) * y.f4(i);
    R t = R::zero();
    for (size_t j = 0; j < x.ambient().beta; ++j) t += x.r(j) * y.r(j);
    return R(F4::zero(), s) + t;  // v*s + t
}

unsigned mixed_weight(const Word& x) {
    unsigned wt = 0;
    for (F4 a : x.f4_block()) wt += hamming_weight(a);
    for (R b : x.r_block()) wt += lee_weight(b);
    return wt;
}

Word gray_word(const Word& x) {
    const Ambient amb = x.ambient();
    std::vector<F4> out(amb.gray_length(), F4::zero());
    for (size_t i = 0; i < amb.alpha; ++i) out[i] = x.f4(i);
    for (size_t j = 0; j < amb.beta; ++j) {
        const GrayPair p = gray_star(x.r(j));
        out[amb.alpha + j] = p.first;
        out[amb.alpha + amb.beta + j] = p.second;
    }
    return Word(std::move(out), {});
}

Word polynomial_action(const Poly<R>& r, const Word& c) {
    const Ambient amb = c.ambient();
    Word out(amb);
    if (amb.alpha > 0) {
        const Poly<F4> a = mul_mod_xn(eta_map(r), Poly<F4>(std::vector<F4>(c.f4_block())), amb.alpha, Twist::none);
        for (size_t i = 0; i < amb.alpha; ++i) out.set_f4(i, a.coeff(i));
    }
    if (amb.beta > 0) {
        const Poly<R> b = mul_mod_xn(r, Poly<R>(std::vector<R>(c.r_block())), amb.beta, Twist::theta);
        for (size_t j = 0; j < amb.beta; ++j) out.set_r(j, b.coeff(j));
    }
    return out;
}

std::string to_string(const Word& x) {
    std::string out;
    for (size_t i = 0; i < x.ambient().alpha; ++i) {
        if (i) out += ' ';
        out += to_string(x.f4(i));
    }
    if (x.ambient().alpha > 0 && x.ambient().beta > 0) out += " | ";
    for (size_t j = 0; j < x.ambient().beta; ++j) {
        if (j) out += ' ';
        out += to_string(x.r(j));
    }
    return out;
}

}  // namespace f4r
