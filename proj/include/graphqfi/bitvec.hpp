#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace graphqfi {

// Fixed-width bit vector over packed 64-bit words, used for Pauli X/Z masks
// and GF(2) row operations. Bits beyond size() are kept zero.
class BitVec {
public:
    BitVec() = default;

    explicit BitVec(int n) : n_(n), w_(words_for(n), 0) {
        if (n < 0) throw std::invalid_argument("BitVec: negative size");
    }

    static BitVec ones(int n) {
        BitVec v(n);
        for (int i = 0; i < n; ++i) v.set(i);
        return v;
    }

    int size() const { return n_; }

    bool test(int i) const {
        check(i);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(int i, bool value = true) {
        check(i);
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (value) w_[i >> 6] |= bit;
        else w_[i >> 6] &= ~bit;
    }

    BitVec& operator^=(const BitVec& o) {
        require_same(o);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    BitVec& operator|=(const BitVec& o) {
        require_same(o);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    // Index of the lowest set bit, -1 when empty.
    int lowest_set() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }

    // Parity of popcount(a & b); the workhorse of symplectic products.
    static int and_parity(const BitVec& a, const BitVec& b) {
        a.require_same(b);
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < a.w_.size(); ++k) acc ^= a.w_[k] & b.w_[k];
        return std::popcount(acc) & 1;
    }

    std::vector<int> bits() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

private:
    static std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

    void check(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("BitVec: index out of range");
    }

    void require_same(const BitVec& o) const {
        if (n_ != o.n_) throw std::invalid_argument("BitVec: size mismatch");
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace graphqfi
