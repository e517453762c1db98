#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace f4r {

// Fixed-width bit vector over GF(2), packed little-endian into 64-bit words
// (bit i lives in word i/64 at position i%64).
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(size_t nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    size_t size() const { return n_; }

    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63u)) & 1u; }
    void set(size_t i, bool value) {
        const uint64_t mask = uint64_t(1) << (i & 63u);
        if (value)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63u); }

    BitVec& operator^=(const BitVec& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }

    bool is_zero() const {
        for (uint64_t x : w_)
            if (x) return false;
        return true;
    }

    // Index of the lowest set bit, or -1 for the zero vector.
    int lowest_set() const;

    size_t popcount() const;

    // Parity of the AND with another vector (GF(2) dot product).
    bool dot(const BitVec& o) const;

    friend bool operator==(const BitVec&, const BitVec&) = default;

    const std::vector<uint64_t>& words() const { return w_; }

    // Bits packed little-endian into bytes, rendered as lowercase hex
    // (two digits per byte, ceil(nbits/8) bytes).
    std::string to_hex() const;
    static BitVec from_hex(std::string_view hex, size_t nbits);

  private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// Basis of a GF(2) subspace kept in reduced row echelon form: pivot columns
// strictly increase and each pivot column has exactly one set bit. The RREF
// basis of a subspace is unique, so equality of spans is row-list equality.
class GF2Basis {
  public:
    GF2Basis() = default;
    explicit GF2Basis(size_t nbits) : nbits_(nbits) {}

    size_t nbits() const { return nbits_; }
    size_t rank() const { return rows_.size(); }
    const std::vector<BitVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Residual of v after reduction by the basis.
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec& v) const { return reduce(v).is_zero(); }

    // Inserts v into the span; returns true when the rank grew.
    bool insert(BitVec v);

    friend bool operator==(const GF2Basis&, const GF2Basis&) = default;

  private:
    size_t nbits_ = 0;
    std::vector<BitVec> rows_;
    std::vector<int> pivots_;
};

// Basis of {y : every constraint row r satisfies <r, y> = 0}.
GF2Basis gf2_nullspace(const std::vector<BitVec>& constraints, size_t nbits);

// Intersection of two subspaces (Zassenhaus on the stacked [u|u], [v|0]).
GF2Basis gf2_intersection(const GF2Basis& a, const GF2Basis& b);

}  // namespace f4r
