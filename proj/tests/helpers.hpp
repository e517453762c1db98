#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "f4r/code.hpp"

namespace f4r::testing {

inline Poly<F4> random_divisor(std::mt19937_64& rng, size_t n, Twist tw) {
    // occasionally the full modulus (the zero component); otherwise a
    // bounded-degree divisor to keep the search space small
    if ((rng() & 7u) == 0) return Poly<F4>::xn_minus_one(n);
    const auto divs = all_monic_right_divisors<F4>(n, std::min<size_t>(n, 6), tw);
    return divs[rng() % divs.size()];
}

// random spec with valid divisibility; ell is arbitrary (possibly of large
// degree, exercising normalization) when with_ell is set
inline GeneratorSpec random_spec(std::mt19937_64& rng, Ambient amb, bool with_ell = true) {
    GeneratorSpec s;
    if (amb.alpha > 0) {
        s.f = random_divisor(rng, amb.alpha, Twist::none);
        if (with_ell && (rng() & 1)) {
            std::vector<F4> e(amb.alpha);
            for (auto& c : e) c = F4(static_cast<uint8_t>(rng() & 3));
            s.ell = Poly<F4>(std::move(e));
        }
    }
    if (amb.beta > 0) {
        s.g1 = random_divisor(rng, amb.beta, Twist::theta);
        s.g2 = random_divisor(rng, amb.beta, Twist::theta);
    }
    return s;
}

inline Word random_word(std::mt19937_64& rng, Ambient amb) {
    Word w(amb);
    for (size_t i = 0; i < amb.alpha; ++i) w.set_f4(i, F4(static_cast<uint8_t>(rng() & 3)));
    for (size_t j = 0; j < amb.beta; ++j) w.set_r(j, R::from_code(static_cast<uint8_t>(rng() & 15)));
    return w;
}

inline Ambient random_ambient(std::mt19937_64& rng, size_t max_bits, bool need_alpha = false, bool need_beta = false) {
    while (true) {
        const size_t alpha = rng() % (max_bits / 2 + 1);
        const size_t beta = rng() % (max_bits / 4 + 1);
        const Ambient amb{alpha, beta};
        if (amb.nbits() > max_bits || amb.nbits() == 0) continue;
        if (need_alpha && alpha == 0) continue;
        if (need_beta && beta == 0) continue;
        return amb;
    }
}

}  // namespace f4r::testing
