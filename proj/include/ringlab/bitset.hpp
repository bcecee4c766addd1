#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ringlab {

/// Dynamic bitset sized to a ring's element count. Element sets (ideal
/// members, multiplicative sets, scan regions) are all stored this way so
/// subset/intersection tests are word operations.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((static_cast<size_t>(n) + 63) / 64, 0) {}

    int universe_size() const { return n_; }

    bool test(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[static_cast<size_t>(i) >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[static_cast<size_t>(i) >> 6] &= ~(uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool none() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    Bitset& operator&=(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    /// a & ~b, the scan region "in a but not in b".
    friend Bitset and_not(Bitset a, const Bitset& b) {
        for (size_t k = 0; k < a.w_.size(); ++k) a.w_[k] &= ~b.w_[k];
        return a;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    bool is_subset_of(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    /// Orders bitsets by their value as a base-2 number (bit i weighs 2^i).
    /// Used for the canonical ideal ordering.
    bool value_less(const Bitset& o) const {
        for (size_t k = w_.size(); k-- > 0;)
            if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
        return false;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for (size_t k = 0; k < w_.size(); ++k) {
            uint64_t w = w_[k];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<int>(k * 64) + b);
                w &= w - 1;
            }
        }
        return out;
    }

    size_t hash() const {
        size_t h = std::hash<int>()(n_);
        for (uint64_t w : w_) h = h * 1099511628211ULL + static_cast<size_t>(w);
        return h;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

struct BitsetHash {
    size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace ringlab
