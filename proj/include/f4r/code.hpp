#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "f4r/bitvec.hpp"
#include "f4r/poly.hpp"
#include "f4r/word.hpp"

namespace f4r {

// Operators a code can be closed under. Scalar closure plus additive span
// makes a set an F4-subspace / R-submodule; the shift operators give the
// cyclic / skew-cyclic variants.
enum class ClosureOp : unsigned {
    f4_scalars = 1u << 0,
    r_scalars = 1u << 1,
    skew_shift = 1u << 2,   // T_theta: plain shift on the F4 block, theta'd shift on the R block
    plain_shift = 1u << 3,  // T: plain cyclic shift of both blocks
    frob_shift = 1u << 4,   // twisted shift on both blocks (skew-cyclic for pure F4 codes)
};
using OpSet = unsigned;

constexpr OpSet operator|(ClosureOp a, ClosureOp b) { return static_cast<OpSet>(a) | static_cast<OpSet>(b); }
constexpr OpSet operator|(OpSet a, ClosureOp b) { return a | static_cast<OpSet>(b); }
constexpr bool has_op(OpSet s, ClosureOp o) { return (s & static_cast<OpSet>(o)) != 0; }

std::vector<std::string> op_set_names(OpSet ops);
OpSet op_set_from_names(const std::vector<std::string>& names);

// A code in F4^alpha x R^beta, stored as the unique reduced-row-echelon
// basis of its bit expansion over GF(2) (2 bits per F4 symbol, 4 per R
// symbol). |C| = 2^rank; flags record which operators the code has been
// verified closed under.
class Code {
  public:
    explicit Code(Ambient amb) : amb_(amb), basis_(amb.nbits()) {}

    static Code zero(Ambient amb) { return Code(amb); }
    static Code full(Ambient amb);
    static Code from_rows(Ambient amb, std::span<const BitVec> rows, OpSet flags = 0);
    static Code from_words(Ambient amb, std::span<const Word> words, OpSet flags = 0);

    const Ambient& ambient() const { return amb_; }
    const GF2Basis& basis() const { return basis_; }
    OpSet closure_flags() const { return flags_; }
    void set_closure_flags(OpSet f) { flags_ = f; }

    size_t log2_size() const { return basis_.rank(); }
    // F4 dimension when |C| is a power of 4; codes of odd GF(2) rank are
    // non-free and have no integral F4 dimension.
    std::optional<size_t> dim_f4() const {
        if (basis_.rank() % 2 != 0) return std::nullopt;
        return basis_.rank() / 2;
    }

    bool contains(const BitVec& v) const { return basis_.contains(v); }
    bool contains(const Word& w) const { return basis_.contains(w.to_bits()); }
    std::vector<Word> basis_words() const;

    friend bool operator==(const Code& a, const Code& b) {
        return a.amb_ == b.amb_ && a.basis_ == b.basis_;
    }

  private:
    Ambient amb_;
    GF2Basis basis_;
    OpSet flags_ = 0;
};

// Smallest set containing the generators that is an additive group and is
// closed under every requested operator.
Code closure(Ambient amb, std::span<const Word> generators, OpSet ops);

// Re-checks one closure property directly against the basis.
bool verify_closed(const Code& c, ClosureOp op);

// Deterministic codeword enumeration (message index order). Throws
// BudgetError when |C| exceeds cap.
void for_each_codeword(const Code& c, uint64_t cap, const std::function<void(const Word&)>& fn);
std::vector<Word> codewords(const Code& c, uint64_t cap);

// --- generator specs ------------------------------------------------------

// Generators of a mixed skew-cyclic code: (f, 0) and (ell, g) with
// g = v g1 + (v+1) g2. f generates the pure-F4-block ideal and must divide
// X^alpha - 1 in F4[X]; g1, g2 must right-divide X^beta - 1 in F4[X,theta].
struct GeneratorSpec {
    Poly<F4> f;
    Poly<F4> ell;
    Poly<F4> g1;
    Poly<F4> g2;

    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

// g = v g1 + (v+1) g2 over R.
Poly<R> combined_generator(const GeneratorSpec& spec);

// Reduces ell modulo f so that deg ell < deg f; the generated code is
// unchanged because the correction terms are multiples of (f, 0).
GeneratorSpec normalize_ell(GeneratorSpec spec);

// Throws PreconditionError (with the offending remainder) when a
// divisibility requirement fails.
void validate_spec(const GeneratorSpec& spec, Ambient amb);

// Closure of {(f, 0), (ell, g)} under R-scalars and T_theta.
Code build_from_spec(const GeneratorSpec& spec, Ambient amb);

// Pure F4 codes from one generator polynomial: cyclic (plain shift) or
// skew cyclic (Frobenius-twisted shift) of length n.
Code build_f4_cyclic(const Poly<F4>& gen, size_t n);
Code build_f4_skew_cyclic(const Poly<F4>& gen, size_t n);

// --- duals and orthogonality ----------------------------------------------

// C^perp = {y : <x, y> = 0 for all x in C}, via GF(2) nullspace of the
// bit-linear maps y -> bits(<x_i, y>) over the basis.
Code dual(const Code& c);

// Exhaustive oracle: filters the full ambient. Intended for small ambients.
Code dual_by_enumeration(const Code& c, uint64_t cap = uint64_t(1) << 22);

bool is_self_orthogonal(const Code& c);

// Euclidean self-orthogonality of a pure-F4 code (sum x_i y_i = 0 in F4).
bool is_euclidean_self_orthogonal(const Code& c);

// --- Gray map and components ----------------------------------------------

// Image of the code under phi, a pure F4 code of length alpha + 2 beta with
// block layout (F4 block | a+b block | a block).
Code gray_image(const Code& c);

// (C0, C1, C2): F4-block projection, CRT sum components (a+b), CRT first
// components (a); all pure F4 codes of lengths alpha, beta, beta.
std::array<Code, 3> component_codes(const Code& c);

// All concatenations (u, v, w); the three inputs must be pure F4 codes.
Code direct_product(const Code& c0, const Code& c1, const Code& c2);

// --- distances --------------------------------------------------------------

enum class Metric { mixed, gray_hamming };

struct DistanceResult {
    unsigned value = 0;
    bool exact = false;
};

struct DistanceOptions {
    uint64_t enumeration_cap = uint64_t(1) << 24;
    uint64_t sample_budget = 200000;
    uint64_t seed = 0;
};

// Exact minimum nonzero weight when |C| <= enumeration_cap, otherwise the
// best upper bound from seeded uniform sampling of the span (exact=false).
DistanceResult min_distance(const Code& c, Metric metric = Metric::mixed, const DistanceOptions& opts = {});

// --- structure checks --------------------------------------------------------

struct EquivalenceReport {
    bool skew_closed = false;
    // Plain single-shift closure; checked when alpha and beta are both odd.
    std::optional<bool> plain_shift_closed;
    // Plain double-shift closure; checked when alpha and beta are both even.
    std::optional<bool> double_shift_closed;

    bool all_passed() const {
        return skew_closed && plain_shift_closed.value_or(true) && double_shift_closed.value_or(true);
    }
};

EquivalenceReport check_equivalence_theorems(const Code& c);

// Computes the dual and tests T_theta closure.
bool is_dual_skew_cyclic(const Code& c, size_t max_nbits = 4096);

}  // namespace f4r
