#include "f4r/code.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "f4r/text.hpp"

namespace f4r {

std::vector<std::string> op_set_names(OpSet ops) {
    std::vector<std::string> out;
    if (has_op(ops, ClosureOp::f4_scalars)) out.push_back("f4_scalars");
    if (has_op(ops, ClosureOp::r_scalars)) out.push_back("r_scalars");
    if (has_op(ops, ClosureOp::skew_shift)) out.push_back("skew_shift");
    if (has_op(ops, ClosureOp::plain_shift)) out.push_back("plain_shift");
    if (has_op(ops, ClosureOp::frob_shift)) out.push_back("frob_shift");
    return out;
}

OpSet op_set_from_names(const std::vector<std::string>& names) {
    OpSet ops = 0;
    for (const std::string& n : names) {
        if (n == "f4_scalars")
            ops = ops | ClosureOp::f4_scalars;
        else if (n == "r_scalars")
            ops = ops | ClosureOp::r_scalars;
        else if (n == "skew_shift")
            ops = ops | ClosureOp::skew_shift;
        else if (n == "plain_shift")
            ops = ops | ClosureOp::plain_shift;
        else if (n == "frob_shift")
            ops = ops | ClosureOp::frob_shift;
        else
            throw ParseError("unknown closure operator: '" + n + "'");
    }
    return ops;
}

Code Code::full(Ambient amb) {
    Code c(amb);
    for (size_t i = 0; i < amb.nbits(); ++i) {
        BitVec v(amb.nbits());
        v.set(i, true);
        c.basis_.insert(std::move(v));
    }
    c.flags_ = ClosureOp::f4_scalars | ClosureOp::r_scalars | ClosureOp::skew_shift | ClosureOp::plain_shift |
               ClosureOp::frob_shift;
    return c;
}

Code Code::from_rows(Ambient amb, std::span<const BitVec> rows, OpSet flags) {
    Code c(amb);
    for (const BitVec& r : rows) c.basis_.insert(r);
    c.flags_ = flags;
    return c;
}

Code Code::from_words(Ambient amb, std::span<const Word> words, OpSet flags) {
    Code c(amb);
    for (const Word& w : words) c.basis_.insert(w.to_bits());
    c.flags_ = flags;
    return c;
}

std::vector<Word> Code::basis_words() const {
    std::vector<Word> out;
    out.reserve(basis_.rank());
    for (const BitVec& r : basis_.rows()) out.push_back(Word::from_bits(amb_, r));
    return out;
}

namespace {

std::vector<Word (*)(const Word&)> shift_ops(OpSet ops) {
    std::vector<Word (*)(const Word&)> fs;
    if (has_op(ops, ClosureOp::skew_shift)) fs.push_back(&skew_shift);
    if (has_op(ops, ClosureOp::plain_shift)) fs.push_back(&plain_shift);
    if (has_op(ops, ClosureOp::frob_shift)) fs.push_back(&frob_shift);
    return fs;
}

}  // namespace

Code closure(Ambient amb, std::span<const Word> generators, OpSet ops) {
    if (amb.nbits() > 4096) throw BudgetError("closure: ambient exceeds 4096 bits");
    Code c(amb);
    GF2Basis basis(amb.nbits());
    std::vector<BitVec> work;
    for (const Word& g : generators) {
        if (g.ambient() != amb) throw PreconditionError("closure: generator ambient mismatch");
        BitVec v = g.to_bits();
        if (basis.insert(v)) work.push_back(std::move(v));
    }

    // w generates the F4 scalars multiplicatively; adding v reaches every
    // R scalar because d*x = a*x + v*(b*x) and the span is additive.
    const bool mul_w = has_op(ops, ClosureOp::f4_scalars) || has_op(ops, ClosureOp::r_scalars);
    const bool mul_v = has_op(ops, ClosureOp::r_scalars);
    const auto shifts = shift_ops(ops);

    while (!work.empty()) {
        const BitVec v = std::move(work.back());
        work.pop_back();
        const Word x = Word::from_bits(amb, v);
        auto push = [&](const Word& y) {
            BitVec b = y.to_bits();
            if (basis.insert(b)) work.push_back(std::move(b));
        };
        if (mul_w) push(scalar_mul(F4::w(), x));
        if (mul_v) push(scalar_mul(R::v(), x));
        for (auto f : shifts) push(f(x));
    }

    std::vector<BitVec> rows = basis.rows();
    return Code::from_rows(amb, rows, ops);
}

bool verify_closed(const Code& c, ClosureOp op) {
    for (const Word& x : c.basis_words()) {
        switch (op) {
            case ClosureOp::f4_scalars:
                for (uint8_t k = 1; k < F4::size; ++k)
                    if (!c.contains(scalar_mul(F4::from_code(k), x))) return false;
                break;
            case ClosureOp::r_scalars:
                for (uint8_t k = 0; k < R::size; ++k)
                    if (!c.contains(scalar_mul(R::from_code(k), x))) return false;
                break;
            case ClosureOp::skew_shift:
                if (!c.contains(skew_shift(x))) return false;
                break;
            case ClosureOp::plain_shift:
                if (!c.contains(plain_shift(x))) return false;
                break;
            case ClosureOp::frob_shift:
                if (!c.contains(frob_shift(x))) return false;
                break;
        }
    }
    return true;
}

void for_each_codeword(const Code& c, uint64_t cap, const std::function<void(const Word&)>& fn) {
    const size_t k = c.log2_size();
    if (k >= 63 || (uint64_t(1) << k) > cap) throw BudgetError("for_each_codeword: code exceeds enumeration cap");
    const auto& rows = c.basis().rows();
    const uint64_t total = uint64_t(1) << k;
    for (uint64_t m = 0; m < total; ++m) {
        BitVec acc(c.ambient().nbits());
        for (size_t i = 0; i < k; ++i)
            if ((m >> i) & 1u) acc ^= rows[i];
        fn(Word::from_bits(c.ambient(), acc));
    }
}

std::vector<Word> codewords(const Code& c, uint64_t cap) {
    std::vector<Word> out;
    out.reserve(size_t(1) << std::min<size_t>(c.log2_size(), 24));
    for_each_codeword(c, cap, [&](const Word& w) { out.push_back(w); });
    return out;
}

// --- generator specs ------------------------------------------------------

Poly<R> combined_generator(const GeneratorSpec& spec) {
    const R vv = R::v();
    const R v1 = R(F4::one(), F4::one());  // v + 1
    const size_t n = static_cast<size_t>(std::max(spec.g1.degree(), spec.g2.degree()) + 1);
    std::vector<R> coeffs(std::max<size_t>(n, 1), R::zero());
    for (size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] = vv * R::from_f4(spec.g1.coeff(i)) + v1 * R::from_f4(spec.g2.coeff(i));
    return Poly<R>(std::move(coeffs));
}

GeneratorSpec normalize_ell(GeneratorSpec spec) {
    if (spec.f.is_zero()) throw PreconditionError("normalize_ell: f must be nonzero");
    while (!spec.ell.is_zero() && spec.ell.degree() >= spec.f.degree()) {
        const size_t k = static_cast<size_t>(spec.ell.degree() - spec.f.degree());
        const F4 s = spec.ell.leading() * spec.f.leading().inverse();
        spec.ell += mul(Poly<F4>::monomial(s, k), spec.f, Twist::none);
    }
    return spec;
}

namespace {

// "0" for g1/g2 denotes the zero R-side component, i.e. X^beta - 1.
GeneratorSpec canonicalize_spec(GeneratorSpec spec, Ambient amb) {
    if (amb.beta > 0) {
        if (spec.g1.is_zero()) spec.g1 = Poly<F4>::xn_minus_one(amb.beta);
        if (spec.g2.is_zero()) spec.g2 = Poly<F4>::xn_minus_one(amb.beta);
    }
    return spec;
}

Poly<F4> reduce_mod_xn(const Poly<F4>& p, size_t n) { return mul_mod_xn(p, Poly<F4>::one(), n, Twist::none); }

}  // namespace

void validate_spec(const GeneratorSpec& spec, Ambient amb) {
    if (amb.alpha == 0) {
        if (!spec.f.is_zero() || !spec.ell.is_zero())
            throw PreconditionError("spec: alpha = 0 but f or ell is nonzero");
    } else if (!spec.f.is_zero()) {
        const auto dr = right_divide(Poly<F4>::xn_minus_one(amb.alpha), spec.f, Twist::none);
        if (!dr.remainder.is_zero())
            throw PreconditionError("spec: f does not divide X^alpha-1, remainder " + to_string(dr.remainder));
    }
    if (amb.beta == 0) {
        if (!spec.g1.is_zero() || !spec.g2.is_zero())
            throw PreconditionError("spec: beta = 0 but g1 or g2 is nonzero");
        return;
    }
    for (const auto* g : {&spec.g1, &spec.g2}) {
        const auto dr = right_divide(Poly<F4>::xn_minus_one(amb.beta), *g, Twist::theta);
        if (!dr.remainder.is_zero())
            throw PreconditionError("spec: generator does not right-divide X^beta-1, remainder " +
                                    to_string(dr.remainder));
    }
}

Code build_from_spec(const GeneratorSpec& spec_in, Ambient amb) {
    GeneratorSpec spec = canonicalize_spec(spec_in, amb);
    validate_spec(spec, amb);
    if (!spec.f.is_zero() && !spec.ell.is_zero() && spec.ell.degree() >= spec.f.degree()) spec = normalize_ell(spec);

    std::vector<Word> gens;
    if (amb.alpha > 0 && !spec.f.is_zero()) {
        const Poly<F4> fr = reduce_mod_xn(spec.f, amb.alpha);
        Word wf(amb);
        for (size_t i = 0; i < amb.alpha; ++i) wf.set_f4(i, fr.coeff(i));
        if (!wf.is_zero()) gens.push_back(std::move(wf));
    }
    {
        Word wg(amb);
        if (amb.alpha > 0) {
            const Poly<F4> er = reduce_mod_xn(spec.ell, amb.alpha);
            for (size_t i = 0; i < amb.alpha; ++i) wg.set_f4(i, er.coeff(i));
        }
        if (amb.beta > 0) {
            const Poly<R> g = mul_mod_xn(combined_generator(spec), Poly<R>::one(), amb.beta, Twist::theta);
            for (size_t j = 0; j < amb.beta; ++j) wg.set_r(j, g.coeff(j));
        }
        if (!wg.is_zero()) gens.push_back(std::move(wg));
    }
    return closure(amb, gens, ClosureOp::r_scalars | ClosureOp::skew_shift);
}

namespace {

Code build_f4_from_generator(const Poly<F4>& gen, size_t n, Twist tw, ClosureOp shift) {
    if (n == 0) throw PreconditionError("pure F4 build: length must be positive");
    if (!gen.is_zero()) {
        const auto dr = right_divide(Poly<F4>::xn_minus_one(n), gen, tw);
        if (!dr.remainder.is_zero())
            throw PreconditionError("generator does not divide X^n-1, remainder " + to_string(dr.remainder));
    }
    const Ambient amb{n, 0};
    const Poly<F4> gr = mul_mod_xn(gen, Poly<F4>::one(), n, Twist::none);
    Word w(amb);
    for (size_t i = 0; i < n; ++i) w.set_f4(i, gr.coeff(i));
    std::vector<Word> gens;
    if (!w.is_zero()) gens.push_back(std::move(w));
    return closure(amb, gens, ClosureOp::f4_scalars | shift);
}

}  // namespace

Code build_f4_cyclic(const Poly<F4>& gen, size_t n) {
    return build_f4_from_generator(gen, n, Twist::none, ClosureOp::plain_shift);
}

Code build_f4_skew_cyclic(const Poly<F4>& gen, size_t n) {
    return build_f4_from_generator(gen, n, Twist::theta, ClosureOp::frob_shift);
}

// --- duals ------------------------------------------------------------------

Code dual(const Code& c) {
    const Ambient amb = c.ambient();
    const size_t nbits = amb.nbits();
    if (nbits > 4096) throw BudgetError("dual: ambient exceeds the linear-system budget");

    std::vector<Word> units;
    units.reserve(nbits);
    for (size_t j = 0; j < nbits; ++j) {
        BitVec e(nbits);
        e.set(j, true);
        units.push_back(Word::from_bits(amb, e));
    }

    std::vector<BitVec> constraints;
    constraints.reserve(4 * c.log2_size());
    for (const Word& x : c.basis_words()) {
        std::array<BitVec, 4> rows{BitVec(nbits), BitVec(nbits), BitVec(nbits), BitVec(nbits)};
        for (size_t j = 0; j < nbits; ++j) {
            const uint8_t val = inner_product(x, units[j]).code();
            for (unsigned t = 0; t < 4; ++t)
                if ((val >> t) & 1u) rows[t].set(j, true);
        }
        for (auto& r : rows)
            if (!r.is_zero()) constraints.push_back(std::move(r));
    }

    const GF2Basis null = gf2_nullspace(constraints, nbits);
    Code out = Code::from_rows(amb, null.rows());
    if (verify_closed(out, ClosureOp::r_scalars)) out.set_closure_flags(static_cast<OpSet>(ClosureOp::r_scalars));
    return out;
}

Code dual_by_enumeration(const Code& c, uint64_t cap) {
    const Ambient amb = c.ambient();
    const size_t nbits = amb.nbits();
    if (nbits >= 63 || (uint64_t(1) << nbits) > cap)
        throw BudgetError("dual_by_enumeration: ambient exceeds enumeration cap");
    const auto basis = c.basis_words();
    GF2Basis found(nbits);
    for (uint64_t m = 0; m < (uint64_t(1) << nbits); ++m) {
        BitVec v(nbits);
        for (size_t i = 0; i < nbits; ++i)
            if ((m >> i) & 1u) v.set(i, true);
        const Word y = Word::from_bits(amb, v);
        bool ok = true;
        for (const Word& x : basis)
            if (!inner_product(x, y).is_zero()) {
                ok = false;
                break;
            }
        if (ok) found.insert(v);
    }
    return Code::from_rows(amb, found.rows());
}

bool is_self_orthogonal(const Code& c) {
    const auto rows = c.basis_words();
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i; j < rows.size(); ++j)
            if (!inner_product(rows[i], rows[j]).is_zero()) return false;
    return true;
}

bool is_euclidean_self_orthogonal(const Code& c) {
    if (c.ambient().beta != 0) throw PreconditionError("Euclidean self-orthogonality is defined for pure F4 codes");
    const auto rows = c.basis_words();
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i; j < rows.size(); ++j) {
            F4 s = F4::zero();
            for (size_t t = 0; t < c.ambient().alpha; ++t) s += rows[i].f4(t) * rows[j].f4(t);
            if (!s.is_zero()) return false;
        }
    return true;
}

// --- Gray map and components -------------------------------------------------

Code gray_image(const Code& c) {
    const Ambient out_amb{c.ambient().gray_length(), 0};
    std::vector<Word> rows;
    rows.reserve(c.log2_size());
    for (const Word& x : c.basis_words()) rows.push_back(gray_word(x));
    return Code::from_words(out_amb, rows);
}

std::array<Code, 3> component_codes(const Code& c) {
    const Ambient amb = c.ambient();
    std::vector<Word> r0, r1, r2;
    for (const Word& x : c.basis_words()) {
        r0.emplace_back(std::vector<F4>(x.f4_block()), std::vector<R>{});
        std::vector<F4> sum(amb.beta), first(amb.beta);
        for (size_t j = 0; j < amb.beta; ++j) {
            const auto [p, q] = crt_decompose(x.r(j));
            sum[j] = p;
            first[j] = q;
        }
        r1.emplace_back(std::move(sum), std::vector<R>{});
        r2.emplace_back(std::move(first), std::vector<R>{});
    }
    return {Code::from_words({amb.alpha, 0}, r0), Code::from_words({amb.beta, 0}, r1),
            Code::from_words({amb.beta, 0}, r2)};
}

Code direct_product(const Code& c0, const Code& c1, const Code& c2) {
    for (const Code* c : {&c0, &c1, &c2})
        if (c->ambient().beta != 0) throw PreconditionError("direct_product: components must be pure F4 codes");
    const size_t n0 = c0.ambient().alpha, n1 = c1.ambient().alpha, n2 = c2.ambient().alpha;
    const Ambient amb{n0 + n1 + n2, 0};
    std::vector<Word> rows;
    auto pad = [&](const Code& c, size_t offset) {
        for (const Word& x : c.basis_words()) {
            Word w(amb);
            for (size_t i = 0; i < c.ambient().alpha; ++i) w.set_f4(offset + i, x.f4(i));
            rows.push_back(std::move(w));
        }
    };
    pad(c0, 0);
    pad(c1, n0);
    pad(c2, n0 + n1);
    return Code::from_words(amb, rows);
}

// --- distances ---------------------------------------------------------------

namespace {

struct WeightTables {
    std::vector<uint8_t> f4w, lee;
    WeightTables() : f4w(65536), lee(65536) {
        for (uint32_t v = 0; v < 65536; ++v) {
            uint8_t fw = 0, lw = 0;
            for (unsigned p = 0; p < 8; ++p)
                if ((v >> (2 * p)) & 3u) ++fw;
            for (unsigned q = 0; q < 4; ++q)
                lw = static_cast<uint8_t>(lw + lee_weight(R::from_code(static_cast<uint8_t>((v >> (4 * q)) & 15u))));
            f4w[v] = fw;
            lee[v] = lw;
        }
    }
};

const WeightTables& wtables() {
    static const WeightTables t;
    return t;
}

// Basis rows re-packed into 16-bit chunks, F4 block first (2 bits per
// symbol), then the R block (4 bits per symbol) starting on its own chunk.
struct PackedRows {
    size_t nf = 0, nr = 0;
    std::vector<std::vector<uint16_t>> rows;
};

PackedRows pack_rows(const Code& c) {
    const Ambient amb = c.ambient();
    PackedRows p;
    p.nf = (2 * amb.alpha + 15) / 16;
    p.nr = (4 * amb.beta + 15) / 16;
    for (const Word& w : c.basis_words()) {
        std::vector<uint16_t> row(p.nf + p.nr, 0);
        for (size_t i = 0; i < amb.alpha; ++i)
            row[i / 8] = static_cast<uint16_t>(row[i / 8] | (uint16_t(w.f4(i).code()) << (2 * (i % 8))));
        for (size_t j = 0; j < amb.beta; ++j)
            row[p.nf + j / 4] = static_cast<uint16_t>(row[p.nf + j / 4] | (uint16_t(w.r(j).code()) << (4 * (j % 4))));
        p.rows.push_back(std::move(row));
    }
    return p;
}

unsigned packed_weight(const PackedRows& p, const std::vector<uint16_t>& cur) {
    const WeightTables& t = wtables();
    unsigned wt = 0;
    for (size_t k = 0; k < p.nf; ++k) wt += t.f4w[cur[k]];
    for (size_t k = 0; k < p.nr; ++k) wt += t.lee[cur[p.nf + k]];
    return wt;
}

}  // namespace

DistanceResult min_distance(const Code& c, Metric metric, const DistanceOptions& opts) {
    if (metric == Metric::gray_hamming) return min_distance(gray_image(c), Metric::mixed, opts);
    const size_t k = c.log2_size();
    if (k == 0) throw PreconditionError("min_distance: the trivial code has no nonzero word");

    const PackedRows p = pack_rows(c);
    const size_t len = p.nf + p.nr;
    std::vector<uint16_t> cur(len, 0);
    unsigned best = ~0u;

    if (k < 63 && (uint64_t(1) << k) <= opts.enumeration_cap) {
        const uint64_t total = uint64_t(1) << k;
        for (uint64_t s = 1; s < total; ++s) {
            const int idx = std::countr_zero(s);
            const auto& row = p.rows[static_cast<size_t>(idx)];
            for (size_t t = 0; t < len; ++t) cur[t] ^= row[t];
            const unsigned wt = packed_weight(p, cur);
            if (wt < best) best = wt;
        }
        return {best, true};
    }

    std::mt19937_64 rng(opts.seed);
    const size_t mask_words = (k + 63) / 64;
    for (uint64_t s = 0; s < opts.sample_budget; ++s) {
        std::vector<uint64_t> mask(mask_words);
        bool zero = true;
        for (size_t t = 0; t < mask_words; ++t) {
            mask[t] = rng();
            if (t + 1 == mask_words && (k % 64) != 0) mask[t] &= (uint64_t(1) << (k % 64)) - 1;
            if (mask[t]) zero = false;
        }
        if (zero) continue;
        std::fill(cur.begin(), cur.end(), 0);
        for (size_t i = 0; i < k; ++i)
            if ((mask[i / 64] >> (i % 64)) & 1u)
                for (size_t t = 0; t < len; ++t) cur[t] ^= p.rows[i][t];
        const unsigned wt = packed_weight(p, cur);
        if (wt < best) best = wt;
    }
    return {best, false};
}

// --- structure checks ----------------------------------------------------------

EquivalenceReport check_equivalence_theorems(const Code& c) {
    EquivalenceReport rep;
    rep.skew_closed = verify_closed(c, ClosureOp::skew_shift);
    const bool a_odd = c.ambient().alpha % 2 == 1, b_odd = c.ambient().beta % 2 == 1;
    if (a_odd && b_odd) rep.plain_shift_closed = verify_closed(c, ClosureOp::plain_shift);
    if (!a_odd && !b_odd) {
        bool ok = true;
        for (const Word& x : c.basis_words())
            if (!c.contains(plain_shift(plain_shift(x)))) {
                ok = false;
                break;
            }
        rep.double_shift_closed = ok;
    }
    return rep;
}

bool is_dual_skew_cyclic(const Code& c, size_t max_nbits) {
    if (c.ambient().nbits() > max_nbits) throw BudgetError("is_dual_skew_cyclic: ambient too large");
    return verify_closed(dual(c), ClosureOp::skew_shift);
}

}  // namespace f4r
