#include "f4r/wsearch.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

namespace f4r {

namespace {

Word word_from_f4_row(const std::vector<uint8_t>& row) {
    std::vector<F4> v;
    v.reserve(row.size());
    for (uint8_t c : row) v.emplace_back(c);
    return Word(std::move(v), {});
}

// Full-span scan; returns the exact minimum and a word achieving it.
WitnessResult exact_scan(const Code& c) {
    const size_t k = c.log2_size();
    const auto& rows = c.basis().rows();
    BitVec cur(c.ambient().nbits());
    uint64_t best_mask = 0;
    unsigned best = ~0u;
    for (uint64_t s = 1; s < (uint64_t(1) << k); ++s) {
        cur ^= rows[static_cast<size_t>(std::countr_zero(s))];
        const unsigned wt = mixed_weight(Word::from_bits(c.ambient(), cur));
        if (wt < best) {
            best = wt;
            best_mask = s ^ (s >> 1);  // Gray code of s
        }
    }
    BitVec v(c.ambient().nbits());
    for (size_t i = 0; i < k; ++i)
        if ((best_mask >> i) & 1u) v ^= rows[i];
    return WitnessResult{best, Word::from_bits(c.ambient(), v), true, "enumeration"};
}

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        if (r > (uint64_t(1) << 60) / n) return uint64_t(1) << 62;  // saturate
        r = r * (n - k + i) / i;
    }
    return r;
}

// Complete search over words of weight <= t_max, normalized so that the
// first nonzero symbol is 1 when the code is scalar closed. Membership is
// tested against the GF(2) orthogonal complement of the basis row space.
struct SupportScan {
    bool found = false;
    unsigned weight = 0;
    Word word{Ambient{}};
    unsigned completed_up_to = 0;
};

SupportScan support_scan(const Code& c, unsigned t_max, uint64_t budget) {
    const size_t n = c.ambient().alpha;
    const bool normalize = has_op(c.closure_flags(), ClosureOp::f4_scalars) ||
                           has_op(c.closure_flags(), ClosureOp::r_scalars);
    const GF2Basis ortho = gf2_nullspace(c.basis().rows(), c.ambient().nbits());

    SupportScan out;
    auto in_code = [&](const BitVec& v) {
        for (const BitVec& h : ortho.rows())
            if (v.dot(h)) return false;
        return true;
    };

    uint64_t cost = 0;
    for (unsigned wt = 1; wt <= t_max && wt < 28; ++wt) {
        // 3^(wt-1) value patterns bounded above by 4^(wt-1); the budget
        // check uses the bound and division to avoid overflow
        const uint64_t combos = binomial(n, wt);
        const uint64_t values = (normalize ? 1 : 3) * (uint64_t(1) << (2 * (wt - 1)));
        if (combos > budget / values || cost + combos * values > budget) break;
        cost += combos * values;

        std::vector<size_t> pos(wt);
        std::iota(pos.begin(), pos.end(), size_t{0});
        std::vector<uint8_t> vals(wt, 1);
        while (true) {
            // iterate value patterns (first symbol fixed to 1 when normalizing)
            std::fill(vals.begin(), vals.end(), 1);
            while (true) {
                BitVec v(c.ambient().nbits());
                for (unsigned t = 0; t < wt; ++t) {
                    const uint8_t code = vals[t];
                    if (code & 1u) v.set(2 * pos[t], true);
                    if (code & 2u) v.set(2 * pos[t] + 1, true);
                }
                if (in_code(v)) {
                    out.found = true;
                    out.weight = wt;
                    out.word = Word::from_bits(c.ambient(), v);
                    out.completed_up_to = wt;
                    return out;
                }
                // odometer over {1, 2, 3}
                size_t t = normalize ? 1 : 0;
                for (; t < wt; ++t) {
                    if (++vals[t] <= 3) break;
                    vals[t] = 1;
                }
                if (t == wt) break;
            }
            // next support combination
            size_t i = wt;
            while (i > 0) {
                --i;
                if (pos[i] + (wt - i) < n) {
                    ++pos[i];
                    for (size_t j = i + 1; j < wt; ++j) pos[j] = pos[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    i = wt + 1;
                    break;
                }
            }
            if (i == wt + 1 || wt == 0) break;
        }
        out.completed_up_to = wt;
    }
    return out;
}

// F4 generator matrix (k x n) extracted from the GF(2) basis by Gaussian
// elimination over F4. Requires the code to be F4-linear.
std::vector<std::vector<uint8_t>> f4_generator_matrix(const Code& c) {
    const size_t n = c.ambient().alpha;
    std::vector<std::vector<uint8_t>> rows;
    for (const Word& w : c.basis_words()) {
        std::vector<uint8_t> r(n);
        for (size_t i = 0; i < n; ++i) r[i] = w.f4(i).code();
        rows.push_back(std::move(r));
    }
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const F4 inv = F4(rows[rank][col]).inverse();
        for (size_t j = col; j < n; ++j) rows[rank][j] = (F4(rows[rank][j]) * inv).code();
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            const F4 factor(rows[i][col]);
            for (size_t j = col; j < n; ++j) rows[i][j] = (F4(rows[i][j]) + factor * F4(rows[rank][j])).code();
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

struct IsdState {
    const Code* code;
    std::vector<std::vector<uint8_t>> gen;  // k x n over F4 codes
    size_t n, k;
    unsigned best = ~0u;
    std::optional<Word> best_word;
};

void isd_consider(IsdState& st, const std::vector<uint8_t>& cand, const std::vector<size_t>& perm) {
    unsigned wt = 0;
    for (uint8_t c : cand)
        if (c) ++wt;
    if (wt == 0 || wt >= st.best) return;
    std::vector<uint8_t> orig(st.n, 0);
    for (size_t t = 0; t < st.n; ++t) orig[perm[t]] = cand[t];
    Word w = word_from_f4_row(orig);
    if (!st.code->contains(w)) return;  // never report a non-member
    st.best = wt;
    st.best_word = std::move(w);
}

// Lee-Brickell: random information set, eliminate, then scan combinations
// of up to p rows.
void isd_search(IsdState& st, unsigned target, unsigned iterations, unsigned p, std::mt19937_64& rng) {
    const size_t n = st.n, k = st.k;
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), size_t{0});

    for (unsigned it = 0; it < iterations && st.best > target; ++it) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::vector<uint8_t>> m(k, std::vector<uint8_t>(n));
        for (size_t i = 0; i < k; ++i)
            for (size_t t = 0; t < n; ++t) m[i][t] = st.gen[i][perm[t]];
        // eliminate left-to-right
        size_t rank = 0;
        for (size_t col = 0; col < n && rank < k; ++col) {
            size_t piv = rank;
            while (piv < k && m[piv][col] == 0) ++piv;
            if (piv == k) continue;
            std::swap(m[rank], m[piv]);
            const F4 inv = F4(m[rank][col]).inverse();
            for (size_t j = 0; j < n; ++j) m[rank][j] = (F4(m[rank][j]) * inv).code();
            for (size_t i = 0; i < k; ++i) {
                if (i == rank || m[i][col] == 0) continue;
                const F4 factor(m[i][col]);
                for (size_t j = 0; j < n; ++j) m[i][j] = (F4(m[i][j]) + factor * F4(m[rank][j])).code();
            }
            ++rank;
        }

        // p = 1
        for (size_t i = 0; i < rank && st.best > target; ++i) isd_consider(st, m[i], perm);
        if (p < 2) continue;
        // p = 2: row_i + c * row_j
        std::vector<uint8_t> cand(n);
        for (size_t i = 0; i < rank && st.best > target; ++i) {
            for (size_t j = i + 1; j < rank && st.best > target; ++j) {
                for (uint8_t cc = 1; cc <= 3 && st.best > target; ++cc) {
                    const F4 c(cc);
                    for (size_t t = 0; t < n; ++t) cand[t] = (F4(m[i][t]) + c * F4(m[j][t])).code();
                    isd_consider(st, cand, perm);
                }
            }
        }
        if (p < 3) continue;
        // p = 3
        std::vector<uint8_t> partial(n);
        for (size_t i = 0; i < rank && st.best > target; ++i) {
            for (size_t j = i + 1; j < rank && st.best > target; ++j) {
                for (uint8_t c2 = 1; c2 <= 3; ++c2) {
                    const F4 cj(c2);
                    for (size_t t = 0; t < n; ++t) partial[t] = (F4(m[i][t]) + cj * F4(m[j][t])).code();
                    for (size_t l = j + 1; l < rank && st.best > target; ++l) {
                        for (uint8_t c3 = 1; c3 <= 3 && st.best > target; ++c3) {
                            const F4 cl(c3);
                            for (size_t t = 0; t < n; ++t) cand[t] = (F4(partial[t]) + cl * F4(m[l][t])).code();
                            isd_consider(st, cand, perm);
                        }
                    }
                }
            }
        }
    }
}

}  // namespace

WitnessResult find_low_weight_codeword(const Code& c, unsigned target, const WitnessOptions& opts) {
    if (c.ambient().beta != 0) throw PreconditionError("find_low_weight_codeword: pure F4 codes only");
    if (c.log2_size() == 0) throw PreconditionError("find_low_weight_codeword: the trivial code has no nonzero word");

    const size_t k2 = c.log2_size();
    if (k2 < 63 && (uint64_t(1) << k2) <= opts.exact_cap) return exact_scan(c);

    WitnessResult res;
    // basis rows are codewords; cheap starting bound
    for (const Word& w : c.basis_words()) {
        const unsigned wt = mixed_weight(w);
        if (wt < res.weight) {
            res.weight = wt;
            res.word = w;
            res.method = "basis";
        }
    }

    const SupportScan scan = support_scan(c, target, opts.support_budget);
    if (scan.found) {
        // ascending scan: the first hit is the exact minimum distance
        res.weight = scan.weight;
        res.word = scan.word;
        res.proven = true;
        res.method = "support";
        return res;
    }
    if (scan.completed_up_to >= target) {
        // every weight <= target exhausted: the minimum provably exceeds target
        res.weight = ~0u;
        res.word.reset();
        res.proven = true;
        res.method = "support";
        return res;
    }

    if (k2 % 2 == 0) {
        IsdState st;
        st.code = &c;
        st.gen = f4_generator_matrix(c);
        st.n = c.ambient().alpha;
        st.k = st.gen.size();
        st.best = res.weight;
        std::mt19937_64 rng(opts.seed);
        isd_search(st, target, opts.isd_iterations_p2, 2, rng);
        if (st.best > target) isd_search(st, target, opts.isd_iterations_p3, 3, rng);
        if (st.best < res.weight && st.best_word) {
            res.weight = st.best;
            res.word = st.best_word;
            res.method = "isd";
        }
    }
    return res;
}

}  // namespace f4r
