#pragma once

#include <string>
#include <vector>

#include "f4r/code.hpp"
#include "f4r/word.hpp"

namespace f4r::dna {

// DNA alphabet bijection with F4: {A, T, C, G} <-> {0, 1, w, w^2}.
char f4_letter(F4 x);
F4 letter_f4(char c);

// The 16-codon bijection between R and pairs of DNA letters.
std::string r_to_codon(R x);
R codon_to_r(std::string_view codon);

// Watson-Crick complement of a single letter (A<->T, C<->G).
char letter_complement(char c);

// Complements at the alphabet level: over R the complement is x + v, over
// F4 it is x + 1. Both are involutions consistent with the codon table.
constexpr R complement(R x) { return x + R::v(); }
constexpr F4 complement(F4 x) { return x + F4::one(); }

// Blockwise word operators: each block is reversed / complemented within
// itself.
Word complement_word(const Word& x);
Word reverse_word(const Word& x);
Word reverse_complement(const Word& x);

// Exhaustive check of the complement identities over R:
//   (i)  comp(a+b) = comp(a) + comp(b) + v          (256 pairs)
//   (ii) comp((v+1)a) = (v+1)comp(a) + v            (16)
//   (iii) comp(va) = v comp(a)                      (16)
struct IdentityReport {
    size_t checked = 0;
    size_t failures = 0;
    bool ok() const { return failures == 0; }
};
IdentityReport complement_identity_checks();

// Brute-force reversible-complement test: every codeword's reverse
// complement must again be a codeword.
bool is_reversible_complement(const Code& c, uint64_t cap = uint64_t(1) << 22);

// Criterion for an R-skew cyclic code <v g1 + (v+1) g2> of length beta:
// the combined generator is self-reciprocal and the all-v word lies in the
// code. g1, g2 must divide X^beta - 1 in F4[X]. When built_out is non-null
// the constructed code is stored there.
bool rc_criterion_r_skew(const Poly<F4>& g1, const Poly<F4>& g2, size_t beta, Code* built_out = nullptr);

// Criterion for a mixed code generated by (f, 0) and (0, g): the pure-F4
// cyclic part must be reversible complement (f self-reciprocal and the
// all-ones word present) and the R part must satisfy the R criterion.
// Requires ell = 0.
bool rc_criterion_f4r(const GeneratorSpec& spec, Ambient amb);

// One disagreement between rc_criterion_r_skew and the brute-force check.
// The sweep over all monic divisor pairs of X^beta - 1 in F4[X] surfaces
// the pairs where the criterion's generator is not canonical for the code
// it generates (the twisted shift can enlarge the nominal components, and
// for odd beta the quotient itself is delicate); such pairs are recorded
// as findings, never patched away.
struct RcFinding {
    size_t beta;
    std::string g1, g2;
    bool criterion;
    bool brute_force;
    size_t log2_size;
};

// Exhaustively compares criterion vs brute force over all monic divisor
// pairs for each beta; returns the disagreements in deterministic order.
std::vector<RcFinding> rc_theorem_sweep(const std::vector<size_t>& betas, uint64_t cap = uint64_t(1) << 22);

// DNA strand of a word: F4 letters first, then one codon per R symbol.
std::string strand(const Word& x);
std::vector<std::string> emit_strands(const Code& c, uint64_t cap = uint64_t(1) << 20);
std::string to_fasta(const std::vector<std::string>& strands);

// Pairwise Hamming-distance constraints for a DNA code:
//   d_H(x, y) >= d for distinct strands, and
//   d_H(x^c, y_rev) >= d for all pairs, including x = y, except that the
//   self-pair of a strand equal to its own reverse complement is excluded
//   and reported as a fixed point instead.
struct HammingReport {
    unsigned min_pair_distance = 0;      // over distinct pairs
    unsigned min_revcomp_distance = 0;   // over checked (x, y) pairs
    std::vector<std::pair<size_t, size_t>> pair_violations;
    std::vector<std::pair<size_t, size_t>> revcomp_violations;
    std::vector<size_t> fixed_points;  // strands with x = x_rev^c
    bool pass = false;
};
HammingReport check_hamming_constraints(const std::vector<std::string>& strands, unsigned d);

}  // namespace f4r::dna
