#include "f4r/dna.hpp"

#include <algorithm>
#include <array>

#include "f4r/errors.hpp"

namespace f4r::dna {

namespace {

// Codon table for R, one row per element code 0..15.
// code = code(a) + 4*code(b) for the element a + vb.
constexpr std::array<const char*, 16> kCodonByCode = [] {
    std::array<const char*, 16> t{};
    auto put = [&t](R x, const char* codon) { t[x.code()] = codon; };
    const F4 o = F4::zero(), l = F4::one(), w = F4::w(), w2 = F4::w2();
    put(R(o, o), "AA");   // 0
    put(R(o, l), "TT");   // v
    put(R(l, l), "AT");   // v + 1
    put(R(l, o), "TA");   // 1
    put(R(w, l), "GT");   // v + w
    put(R(w, o), "CA");   // w
    put(R(w2, l), "CT");  // v + w^2
    put(R(w2, o), "GA");  // w^2
    put(R(l, w2), "CG");  // v w^2 + 1
    put(R(w2, w2), "AG");  // v w^2 + w^2
    put(R(o, w2), "GG");   // v w^2
    put(R(w, w2), "TG");   // v w^2 + w
    put(R(o, w), "CC");    // v w
    put(R(w2, w), "TC");   // v w + w^2
    put(R(w, w), "AC");    // v w + w
    put(R(l, w), "GC");    // v w + 1
    return t;
}();

}  // namespace

char f4_letter(F4 x) {
    constexpr std::array<char, 4> letters{'A', 'T', 'C', 'G'};
    return letters[x.code()];
}

F4 letter_f4(char c) {
    switch (c) {
        case 'A': return F4::zero();
        case 'T': return F4::one();
        case 'C': return F4::w();
        case 'G': return F4::w2();
        default: throw ParseError(std::string("not a DNA letter: '") + c + "'");
    }
}

std::string r_to_codon(R x) { return kCodonByCode[x.code()]; }

R codon_to_r(std::string_view codon) {
    if (codon.size() != 2) throw ParseError("codon must have two letters");
    for (unsigned c = 0; c < 16; ++c)
        if (codon == kCodonByCode[c]) return R::from_code(static_cast<uint8_t>(c));
    throw ParseError("unknown codon: '" + std::string(codon) + "'");
}

char letter_complement(char c) {
    switch (c) {
        case 'A': return 'T';
        case 'T': return 'A';
        case 'C': return 'G';
        case 'G': return 'C';
        default: throw ParseError(std::string("not a DNA letter: '") + c + "'");
    }
}

Word complement_word(const Word& x) {
    Word out = x;
    for (size_t i = 0; i < x.ambient().alpha; ++i) out.set_f4(i, complement(x.f4(i)));
    for (size_t j = 0; j < x.ambient().beta; ++j) out.set_r(j, complement(x.r(j)));
    return out;
}

Word reverse_word(const Word& x) {
    Word out = x;
    const size_t a = x.ambient().alpha, b = x.ambient().beta;
    for (size_t i = 0; i < a; ++i) out.set_f4(i, x.f4(a - 1 - i));
    for (size_t j = 0; j < b; ++j) out.set_r(j, x.r(b - 1 - j));
    return out;
}

Word reverse_complement(const Word& x) { return reverse_word(complement_word(x)); }

IdentityReport complement_identity_checks() {
    IdentityReport rep;
    const R v = R::v(), v1 = R(F4::one(), F4::one());
    for (unsigned i = 0; i < 16; ++i) {
        const R a = R::from_code(static_cast<uint8_t>(i));
        for (unsigned j = 0; j < 16; ++j) {
            const R b = R::from_code(static_cast<uint8_t>(j));
            ++rep.checked;
            if (complement(a + b) != complement(a) + complement(b) + v) ++rep.failures;
        }
        ++rep.checked;
        if (complement(v1 * a) != v1 * complement(a) + v) ++rep.failures;
        ++rep.checked;
        if (complement(v * a) != v * complement(a)) ++rep.failures;
    }
    return rep;
}

bool is_reversible_complement(const Code& c, uint64_t cap) {
    bool ok = true;
    for_each_codeword(c, cap, [&](const Word& w) {
        if (ok && !c.contains(reverse_complement(w))) ok = false;
    });
    return ok;
}

bool rc_criterion_r_skew(const Poly<F4>& g1, const Poly<F4>& g2, size_t beta, Code* built_out) {
    if (beta == 0) throw PreconditionError("rc_criterion_r_skew: beta must be positive");
    for (const auto* g : {&g1, &g2}) {
        if (g->is_zero()) continue;  // zero denotes X^beta - 1
        const auto dr = right_divide(Poly<F4>::xn_minus_one(beta), *g, Twist::none);
        if (!dr.remainder.is_zero())
            throw PreconditionError("rc_criterion_r_skew: generator does not divide X^beta-1 in F4[X], remainder " +
                                    to_string(dr.remainder));
    }
    GeneratorSpec spec;
    spec.g1 = g1.is_zero() ? Poly<F4>::xn_minus_one(beta) : g1;
    spec.g2 = g2.is_zero() ? Poly<F4>::xn_minus_one(beta) : g2;
    const Ambient amb{0, beta};

    const Poly<R> g = combined_generator(spec);
    Word gen(amb);
    {
        const Poly<R> gr = mul_mod_xn(g, Poly<R>::one(), beta, Twist::theta);
        for (size_t j = 0; j < beta; ++j) gen.set_r(j, gr.coeff(j));
    }
    const Code c = closure(amb, std::vector<Word>{gen}, ClosureOp::r_scalars | ClosureOp::skew_shift);
    if (built_out) *built_out = c;

    Word all_v(amb);
    for (size_t j = 0; j < beta; ++j) all_v.set_r(j, R::v());
    const Poly<R> g_reduced = mul_mod_xn(g, Poly<R>::one(), beta, Twist::theta);
    return is_self_reciprocal(g_reduced) && c.contains(all_v);
}

bool rc_criterion_f4r(const GeneratorSpec& spec, Ambient amb) {
    if (!spec.ell.is_zero()) throw PreconditionError("rc_criterion_f4r: requires ell = 0");
    bool f4_part_ok = true;
    if (amb.alpha > 0) {
        const Code c0 = build_f4_cyclic(spec.f, amb.alpha);
        Word all_ones({std::vector<F4>(amb.alpha, F4::one())}, {});
        const Poly<F4> f_reduced = mul_mod_xn(spec.f, Poly<F4>::one(), amb.alpha, Twist::none);
        f4_part_ok = is_self_reciprocal(f_reduced) && c0.contains(all_ones);
    }
    bool r_part_ok = true;
    if (amb.beta > 0) r_part_ok = rc_criterion_r_skew(spec.g1, spec.g2, amb.beta);
    return f4_part_ok && r_part_ok;
}

std::vector<RcFinding> rc_theorem_sweep(const std::vector<size_t>& betas, uint64_t cap) {
    std::vector<RcFinding> findings;
    for (size_t beta : betas) {
        const auto divisors = all_monic_right_divisors<F4>(beta, beta, Twist::none);
        for (const auto& g1 : divisors) {
            for (const auto& g2 : divisors) {
                Code built{Ambient{0, beta}};
                const bool crit = rc_criterion_r_skew(g1, g2, beta, &built);
                const bool brute = is_reversible_complement(built, cap);
                if (crit != brute)
                    findings.push_back({beta, to_string(g1), to_string(g2), crit, brute, built.log2_size()});
            }
        }
    }
    return findings;
}

std::string strand(const Word& x) {
    std::string s;
    s.reserve(x.ambient().gray_length());
    for (size_t i = 0; i < x.ambient().alpha; ++i) s.push_back(f4_letter(x.f4(i)));
    for (size_t j = 0; j < x.ambient().beta; ++j) s += r_to_codon(x.r(j));
    return s;
}

std::vector<std::string> emit_strands(const Code& c, uint64_t cap) {
    std::vector<std::string> out;
    for_each_codeword(c, cap, [&](const Word& w) { out.push_back(strand(w)); });
    return out;
}

std::string to_fasta(const std::vector<std::string>& strands) {
    std::string out;
    for (size_t i = 0; i < strands.size(); ++i) {
        out += ">" + std::to_string(i) + "\n";
        out += strands[i];
        out += "\n";
    }
    return out;
}

namespace {

unsigned strand_distance(const std::string& x, const std::string& y) {
    unsigned d = 0;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) ++d;
    return d;
}

std::string strand_reverse(std::string x) {
    std::reverse(x.begin(), x.end());
    return x;
}

std::string strand_complement(const std::string& x) {
    std::string out = x;
    for (char& c : out) c = letter_complement(c);
    return out;
}

}  // namespace

HammingReport check_hamming_constraints(const std::vector<std::string>& strands, unsigned d) {
    HammingReport rep;
    const size_t n = strands.size();
    for (size_t i = 1; i < n; ++i)
        if (strands[i].size() != strands[0].size())
            throw PreconditionError("check_hamming_constraints: strands must have equal length");

    unsigned min_pair = ~0u, min_rc = ~0u;
    std::vector<std::string> comps(n), revs(n);
    for (size_t i = 0; i < n; ++i) {
        comps[i] = strand_complement(strands[i]);
        revs[i] = strand_reverse(strands[i]);
        if (comps[i] == revs[i]) rep.fixed_points.push_back(i);  // x = x_rev^c
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i < j) {
                const unsigned dist = strand_distance(strands[i], strands[j]);
                min_pair = std::min(min_pair, dist);
                if (dist < d) rep.pair_violations.emplace_back(i, j);
            }
            if (i == j && comps[i] == revs[i]) continue;  // excluded self-pair of a fixed point
            const unsigned dist = strand_distance(comps[i], revs[j]);
            min_rc = std::min(min_rc, dist);
            if (dist < d) rep.revcomp_violations.emplace_back(i, j);
        }
    }
    rep.min_pair_distance = (min_pair == ~0u) ? 0 : min_pair;
    rep.min_revcomp_distance = (min_rc == ~0u) ? 0 : min_rc;
    rep.pass = rep.pair_violations.empty() && rep.revcomp_violations.empty();
    return rep;
}

}  // namespace f4r::dna
