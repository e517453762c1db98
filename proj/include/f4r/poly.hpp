#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "f4r/errors.hpp"
#include "f4r/f4.hpp"
#include "f4r/ring.hpp"
#include "f4r/text.hpp"

namespace f4r {

// Coefficient twist used by polynomial products. Twist::theta gives the
// skew ring K[X, theta] with the rule X * c = theta(c) * X; Twist::none is
// the ordinary commutative polynomial ring.
enum class Twist { none, theta };

constexpr bool is_unit(F4 x) { return !x.is_zero(); }
constexpr bool is_unit(R x) { return x.is_unit(); }

// theta^k under the given twist; only the parity of k matters.
template <class K>
constexpr K twist_pow(K x, size_t k, Twist tw) {
    return (tw == Twist::theta && (k & 1u)) ? theta(x) : x;
}

// Polynomial over K in {F4, R}, coefficient of X^i at index i.
// Canonical form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector and degree -1.
template <class K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(K c) { return Poly(std::vector<K>{c}); }
    static Poly one() { return constant(K::one()); }
    static Poly monomial(K c, size_t deg) {
        std::vector<K> v(deg + 1, K::zero());
        v[deg] = c;
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(K::one(), 1); }
    // X^n - 1, which in characteristic 2 is X^n + 1.
    static Poly xn_minus_one(size_t n) {
        if (n == 0) throw PreconditionError("xn_minus_one: n must be positive");
        std::vector<K> v(n + 1, K::zero());
        v[0] = K::one();
        v[n] = K::one();
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    K coeff(size_t i) const { return i < c_.size() ? c_[i] : K::zero(); }
    K leading() const { return c_.empty() ? K::zero() : c_.back(); }
    K constant_term() const { return coeff(0); }
    const std::vector<K>& coeffs() const { return c_; }

    bool is_monic() const { return !c_.empty() && leading() == K::one(); }

    unsigned weight() const {
        unsigned n = 0;
        for (const K& c : c_)
            if (!(c == K::zero())) ++n;
        return n;
    }

    friend Poly operator+(const Poly& f, const Poly& g) {
        std::vector<K> v(std::max(f.c_.size(), g.c_.size()), K::zero());
        for (size_t i = 0; i < v.size(); ++i) v[i] = f.coeff(i) + g.coeff(i);
        return Poly(std::move(v));
    }
    Poly& operator+=(const Poly& g) {
        *this = *this + g;
        return *this;
    }
    friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == K::zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

// Product with the requested twist: (a X^i)(b X^j) = a theta^i(b) X^{i+j}
// under Twist::theta, plain convolution under Twist::none.
template <class K>
Poly<K> mul(const Poly<K>& f, const Poly<K>& g, Twist tw) {
    if (f.is_zero() || g.is_zero()) return Poly<K>::zero();
    std::vector<K> out(static_cast<size_t>(f.degree() + g.degree()) + 1, K::zero());
    for (size_t i = 0; i <= static_cast<size_t>(f.degree()); ++i) {
        const K fi = f.coeff(i);
        if (fi == K::zero()) continue;
        for (size_t j = 0; j <= static_cast<size_t>(g.degree()); ++j)
            out[i + j] += fi * twist_pow(g.coeff(j), i, tw);
    }
    return Poly<K>(std::move(out));
}

template <class K>
Poly<K> skew_mul(const Poly<K>& f, const Poly<K>& g) {
    return mul(f, g, Twist::theta);
}

// Product reduced in K[X, tw]/<X^n - 1>: coefficients fold as X^{n+r} = X^r.
template <class K>
Poly<K> mul_mod_xn(const Poly<K>& f, const Poly<K>& g, size_t n, Twist tw) {
    if (n == 0) throw PreconditionError("mul_mod_xn: modulus length must be positive");
    const Poly<K> p = mul(f, g, tw);
    if (p.is_zero()) return p;
    std::vector<K> out(n, K::zero());
    for (size_t t = 0; t <= static_cast<size_t>(p.degree()); ++t) out[t % n] += p.coeff(t);
    return Poly<K>(std::move(out));
}

template <class K>
Poly<K> skew_mul_mod(const Poly<K>& f, const Poly<K>& g, size_t n) {
    return mul_mod_xn(f, g, n, Twist::theta);
}

template <class K>
struct DivResult {
    Poly<K> quotient;
    Poly<K> remainder;
};

// Right division: f = q * d + r with deg r < deg d (product under tw).
// Requires the leading coefficient of d to be a unit.
template <class K>
DivResult<K> right_divide(const Poly<K>& f, const Poly<K>& d, Twist tw) {
    if (d.is_zero()) throw PreconditionError("right_divide: division by zero polynomial");
    if (!is_unit(d.leading())) throw PreconditionError("right_divide: leading coefficient is not a unit");
    const int s = d.degree();
    if (f.degree() < s) return {Poly<K>::zero(), f};

    std::vector<K> rem(f.coeffs());
    std::vector<K> q(static_cast<size_t>(f.degree() - s) + 1, K::zero());
    for (int m = f.degree(); m >= s; --m) {
        if (rem[m] == K::zero()) continue;
        const size_t shift = static_cast<size_t>(m - s);
        const K u = rem[m] * twist_pow(d.leading(), shift, tw).inverse();
        q[shift] = u;
        for (int j = 0; j <= s; ++j) rem[shift + j] += u * twist_pow(d.coeff(j), shift, tw);
    }
    return {Poly<K>(std::move(q)), Poly<K>(std::move(rem))};
}

template <class K>
bool is_right_divisor_of_xn_minus_1(const Poly<K>& d, size_t n, Twist tw) {
    if (n == 0) throw PreconditionError("is_right_divisor_of_xn_minus_1: n must be positive");
    return right_divide(Poly<K>::xn_minus_one(n), d, tw).remainder.is_zero();
}

// Coefficient-wise theta^k.
template <class K>
Poly<K> theta_map(const Poly<K>& f, size_t k) {
    if ((k & 1u) == 0) return f;
    std::vector<K> v(f.coeffs());
    for (K& c : v) c = theta(c);
    return Poly<K>(std::move(v));
}

// Reciprocal polynomial: coefficient i moves to degree (deg f - i).
template <class K>
Poly<K> reciprocal(const Poly<K>& f) {
    if (f.is_zero()) return f;
    std::vector<K> v(static_cast<size_t>(f.degree()) + 1, K::zero());
    for (size_t i = 0; i < v.size(); ++i) v[v.size() - 1 - i] = f.coeff(i);
    return Poly<K>(std::move(v));
}

template <class K>
bool is_self_reciprocal(const Poly<K>& f) {
    return f == reciprocal(f);
}

// The adjusted product f * g := f . theta^{deg f}(g) (skew product), the
// operation under which reversal is multiplicative: (fg)^rec factors as
// rec(f) * rec(g) whenever the degree bookkeeping is clean.
template <class K>
Poly<K> star_mul(const Poly<K>& f, const Poly<K>& g) {
    if (f.is_zero()) return Poly<K>::zero();
    return skew_mul(f, theta_map(g, static_cast<size_t>(f.degree())));
}

inline Poly<F4> eta_map(const Poly<R>& f) {
    std::vector<F4> v;
    v.reserve(f.coeffs().size());
    for (R c : f.coeffs()) v.push_back(eta(c));
    return Poly<F4>(std::move(v));
}

inline Poly<R> lift(const Poly<F4>& f) {
    std::vector<R> v;
    v.reserve(f.coeffs().size());
    for (F4 c : f.coeffs()) v.push_back(R::from_f4(c));
    return Poly<R>(std::move(v));
}

// All monic right divisors of X^n - 1 of degree <= max_degree, in
// deterministic order: degree ascending, then coefficient tuples as a
// little-endian counter over element codes. The candidate count
// sum_{d<=max_degree} |K|^d is checked against the budget up front.
template <class K>
std::vector<Poly<K>> all_monic_right_divisors(size_t n, size_t max_degree, Twist tw, uint64_t budget = uint64_t(1) << 25) {
    uint64_t candidates = 0, pw = 1;
    for (size_t d = 0; d <= max_degree; ++d) {
        candidates += pw;
        if (candidates > budget) throw BudgetError("all_monic_right_divisors: candidate count exceeds budget");
        if (d < max_degree) {
            if (pw > budget) throw BudgetError("all_monic_right_divisors: candidate count exceeds budget");
            pw *= K::size;
        }
    }

    std::vector<Poly<K>> out;
    for (size_t d = 0; d <= max_degree; ++d) {
        std::vector<uint8_t> codes(d, 0);
        while (true) {
            std::vector<K> coeffs;
            coeffs.reserve(d + 1);
            for (uint8_t c : codes) coeffs.push_back(K::from_code(c));
            coeffs.push_back(K::one());
            Poly<K> cand(std::move(coeffs));
            if (is_right_divisor_of_xn_minus_1(cand, n, tw)) out.push_back(std::move(cand));
            size_t i = 0;
            for (; i < d; ++i) {
                if (++codes[i] < K::size) break;
                codes[i] = 0;
            }
            if (i == d) break;
        }
    }
    return out;
}

// Text grammar: terms "c", "c*X", "c*X^k" joined by '+', ascending degree on
// output. Parsing ignores whitespace, accepts juxtaposed coefficients
// ("w^2X^3"), a bare "X^k", lowercase 'x', '-' as '+' (characteristic 2),
// and parenthesized composite R coefficients like "(1+v*w)*X^2".
template <class K>
std::string to_string(const Poly<K>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i <= static_cast<size_t>(f.degree()); ++i) {
        const K c = f.coeff(i);
        if (c == K::zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = to_string(c);
        if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
        if (i == 0) {
            out += cs;
            continue;
        }
        std::string xs = (i == 1) ? "X" : "X^" + std::to_string(i);
        out += (c == K::one()) ? xs : cs + "*" + xs;
    }
    return out;
}

namespace detail {

template <class K>
K parse_poly_constant(std::string_view s);
template <>
inline F4 parse_poly_constant<F4>(std::string_view s) {
    return parse_f4(s);
}
template <>
inline R parse_poly_constant<R>(std::string_view s) {
    return parse_r(s);
}

}  // namespace detail

template <class K>
Poly<K> parse_poly(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        s.push_back(c == '-' ? '+' : c);
    }
    if (s.empty()) throw ParseError("empty polynomial");

    std::vector<std::pair<size_t, K>> terms;
    size_t pos = 0;
    int depth = 0;
    size_t start = 0;
    size_t max_deg = 0;
    auto flush_term = [&](std::string_view term) {
        if (term.empty()) throw ParseError("empty term in polynomial: '" + std::string(text) + "'");
        // locate the X part (outside parentheses)
        size_t xpos = std::string_view::npos;
        int d = 0;
        for (size_t i = 0; i < term.size(); ++i) {
            if (term[i] == '(') ++d;
            if (term[i] == ')') --d;
            if (d == 0 && (term[i] == 'X' || term[i] == 'x')) {
                xpos = i;
                break;
            }
        }
        K coeff = K::one();
        size_t deg = 0;
        if (xpos == std::string_view::npos) {
            coeff = detail::parse_poly_constant<K>(term);
        } else {
            std::string_view pre = term.substr(0, xpos);
            if (!pre.empty() && pre.back() == '*') pre.remove_suffix(1);
            if (!pre.empty()) coeff = detail::parse_poly_constant<K>(pre);
            std::string_view suf = term.substr(xpos + 1);
            if (suf.empty()) {
                deg = 1;
            } else {
                if (suf.front() != '^') throw ParseError("malformed term: '" + std::string(term) + "'");
                suf.remove_prefix(1);
                if (suf.empty()) throw ParseError("missing exponent: '" + std::string(term) + "'");
                deg = 0;
                for (char c : suf) {
                    if (c < '0' || c > '9') throw ParseError("bad exponent: '" + std::string(term) + "'");
                    deg = deg * 10 + static_cast<size_t>(c - '0');
                    if (deg > 1000000) throw ParseError("exponent too large");
                }
            }
        }
        max_deg = std::max(max_deg, deg);
        terms.emplace_back(deg, coeff);
    };

    for (pos = 0; pos < s.size(); ++pos) {
        if (s[pos] == '(') ++depth;
        if (s[pos] == ')') --depth;
        if (s[pos] == '+' && depth == 0) {
            if (pos > start) flush_term(std::string_view(s).substr(start, pos - start));
            else if (start != 0)
                throw ParseError("empty term in polynomial: '" + std::string(text) + "'");
            start = pos + 1;
        }
    }
    if (depth != 0) throw ParseError("unbalanced parentheses: '" + std::string(text) + "'");
    if (start < s.size()) flush_term(std::string_view(s).substr(start));
    if (terms.empty()) throw ParseError("empty polynomial");

    std::vector<K> coeffs(max_deg + 1, K::zero());
    for (const auto& [deg, c] : terms) coeffs[deg] += c;
    return Poly<K>(std::move(coeffs));
}

}  // namespace f4r
