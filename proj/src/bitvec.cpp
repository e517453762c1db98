#include "f4r/bitvec.hpp"

#include <algorithm>
#include <bit>

#include "f4r/errors.hpp"

namespace f4r {

int BitVec::lowest_set() const {
    for (size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return static_cast<int>(k * 64 + std::countr_zero(w_[k]));
    return -1;
}

size_t BitVec::popcount() const {
    size_t n = 0;
    for (uint64_t x : w_) n += static_cast<size_t>(std::popcount(x));
    return n;
}

bool BitVec::dot(const BitVec& o) const {
    uint64_t acc = 0;
    for (size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
    return std::popcount(acc) & 1;
}

std::string BitVec::to_hex() const {
    static const char digits[] = "0123456789abcdef";
    const size_t nbytes = (n_ + 7) / 8;
    std::string out;
    out.reserve(nbytes * 2);
    for (size_t b = 0; b < nbytes; ++b) {
        const uint8_t byte = static_cast<uint8_t>(w_[b / 8] >> ((b % 8) * 8));
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 15]);
    }
    return out;
}

BitVec BitVec::from_hex(std::string_view hex, size_t nbits) {
    const size_t nbytes = (nbits + 7) / 8;
    if (hex.size() != nbytes * 2) throw ParseError("hex word has wrong length");
    BitVec v(nbits);
    auto nib = [](char c) -> unsigned {
        if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
        throw ParseError("bad hex digit");
    };
    for (size_t b = 0; b < nbytes; ++b) {
        const uint64_t byte = (nib(hex[2 * b]) << 4) | nib(hex[2 * b + 1]);
        v.w_[b / 8] |= byte << ((b % 8) * 8);
    }
    // reject set bits beyond nbits
    for (size_t i = nbits; i < nbytes * 8; ++i)
        if (v.get(i)) throw ParseError("hex word has bits beyond the ambient width");
    return v;
}

BitVec GF2Basis::reduce(BitVec v) const {
    for (size_t k = 0; k < rows_.size(); ++k)
        if (v.get(static_cast<size_t>(pivots_[k]))) v ^= rows_[k];
    return v;
}

bool GF2Basis::insert(BitVec v) {
    v = reduce(std::move(v));
    const int p = v.lowest_set();
    if (p < 0) return false;
    // back-eliminate the new pivot from existing rows to keep full RREF
    for (BitVec& row : rows_)
        if (row.get(static_cast<size_t>(p))) row ^= v;
    const auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
    const size_t idx = static_cast<size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

GF2Basis gf2_nullspace(const std::vector<BitVec>& constraints, size_t nbits) {
    GF2Basis row_space(nbits);
    for (const BitVec& c : constraints) row_space.insert(c);

    std::vector<bool> is_pivot(nbits, false);
    for (int p : row_space.pivots()) is_pivot[static_cast<size_t>(p)] = true;

    GF2Basis out(nbits);
    for (size_t j = 0; j < nbits; ++j) {
        if (is_pivot[j]) continue;
        BitVec y(nbits);
        y.set(j, true);
        for (size_t k = 0; k < row_space.rank(); ++k)
            if (row_space.rows()[k].get(j)) y.set(static_cast<size_t>(row_space.pivots()[k]), true);
        out.insert(std::move(y));
    }
    return out;
}

GF2Basis gf2_intersection(const GF2Basis& a, const GF2Basis& b) {
    const size_t n = a.nbits();
    GF2Basis stacked(2 * n);
    auto widen = [n](const BitVec& v, bool duplicate) {
        BitVec w(2 * n);
        for (size_t i = 0; i < n; ++i)
            if (v.get(i)) {
                w.set(i, true);
                if (duplicate) w.set(n + i, true);
            }
        return w;
    };
    for (const BitVec& u : a.rows()) stacked.insert(widen(u, true));
    for (const BitVec& v : b.rows()) stacked.insert(widen(v, false));

    GF2Basis out(n);
    for (const BitVec& row : stacked.rows()) {
        bool left_zero = true;
        for (size_t i = 0; i < n && left_zero; ++i)
            if (row.get(i)) left_zero = false;
        if (!left_zero) continue;
        BitVec r(n);
        for (size_t i = 0; i < n; ++i)
            if (row.get(n + i)) r.set(i, true);
        out.insert(std::move(r));
    }
    return out;
}

}  // namespace f4r
