#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace wojda {

// Fixed-size dynamic bitset tuned for adjacency rows: word-wise boolean ops,
// popcounts of intersections without allocating, and set-bit iteration.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    void clear() {
        for (auto& w : w_) w = 0;
    }
    void set_all() {
        if (nbits_ == 0) return;
        for (auto& w : w_) w = ~std::uint64_t(0);
        trim();
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool operator==(const Bitset& o) const = default;

    // popcount(a & b), no temporary
    static int and_count(const Bitset& a, const Bitset& b) {
        assert(a.nbits_ == b.nbits_);
        int c = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i) c += std::popcount(a.w_[i] & b.w_[i]);
        return c;
    }

    int find_first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }
    int find_next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        std::size_t word = std::size_t(i) >> 6;
        std::uint64_t cur = w_[word] & (~std::uint64_t(0) << (i & 63));
        while (true) {
            if (cur) return int(word * 64) + std::countr_zero(cur);
            if (++word >= w_.size()) return -1;
            cur = w_[word];
        }
    }

    // first index set in *this and clear in `minus`, or -1
    int first_diff(const Bitset& minus) const {
        assert(nbits_ == minus.nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t v = w_[i] & ~minus.w_[i];
            if (v) return int(i * 64) + std::countr_zero(v);
        }
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t cur = w_[i];
            while (cur) {
                f(int(i * 64) + std::countr_zero(cur));
                cur &= cur - 1;
            }
        }
    }

private:
    void trim() {
        int tail = nbits_ & 63;
        if (tail) w_.back() &= (std::uint64_t(1) << tail) - 1;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace wojda
