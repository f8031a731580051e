#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace sfactor {

#ifndef SFACTOR_MAX_ORDER
#define SFACTOR_MAX_ORDER 128
#endif

// Fixed-width bitset sized for the largest supported group order.
// Adjacency rows and element sets are these; the solver hot loops are
// word-parallel AND/OR/ANDNOT on them.
struct Bits {
    static constexpr int max_bits = SFACTOR_MAX_ORDER;
    static constexpr int word_count = (max_bits + 63) / 64;
    static_assert(max_bits >= 1 && max_bits <= 255, "element indices are stored in 8 bits");

    std::array<std::uint64_t, word_count> w{};

    static Bits single(int i) {
        Bits b;
        b.set(i);
        return b;
    }

    // mask with bits 0..n-1 set
    static Bits first_n(int n) {
        Bits b;
        for (int k = 0; k < word_count; ++k) {
            int lo = k * 64;
            if (n >= lo + 64)
                b.w[k] = ~0ull;
            else if (n > lo)
                b.w[k] = (~0ull) >> (64 - (n - lo));
        }
        return b;
    }

    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(1ull << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }

    bool none() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    bool any() const { return !none(); }

    // index of lowest set bit, -1 if empty
    int lowest() const {
        for (int k = 0; k < word_count; ++k)
            if (w[k]) return k * 64 + std::countr_zero(w[k]);
        return -1;
    }

    // next set bit strictly after i, -1 if none
    int next(int i) const {
        ++i;
        int k = i >> 6;
        if (k >= word_count) return -1;
        std::uint64_t cur = w[k] & (~0ull << (i & 63));
        while (true) {
            if (cur) return k * 64 + std::countr_zero(cur);
            if (++k >= word_count) return -1;
            cur = w[k];
        }
    }

    bool operator==(const Bits& o) const { return w == o.w; }
    bool operator!=(const Bits& o) const { return w != o.w; }

    Bits operator&(const Bits& o) const {
        Bits r;
        for (int k = 0; k < word_count; ++k) r.w[k] = w[k] & o.w[k];
        return r;
    }
    Bits operator|(const Bits& o) const {
        Bits r;
        for (int k = 0; k < word_count; ++k) r.w[k] = w[k] | o.w[k];
        return r;
    }
    Bits operator^(const Bits& o) const {
        Bits r;
        for (int k = 0; k < word_count; ++k) r.w[k] = w[k] ^ o.w[k];
        return r;
    }
    Bits& operator&=(const Bits& o) {
        for (int k = 0; k < word_count; ++k) w[k] &= o.w[k];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (int k = 0; k < word_count; ++k) w[k] |= o.w[k];
        return *this;
    }

    // *this & ~o
    Bits minus(const Bits& o) const {
        Bits r;
        for (int k = 0; k < word_count; ++k) r.w[k] = w[k] & ~o.w[k];
        return r;
    }

    bool intersects(const Bits& o) const {
        for (int k = 0; k < word_count; ++k)
            if (w[k] & o.w[k]) return true;
        return false;
    }

    bool subset_of(const Bits& o) const {
        for (int k = 0; k < word_count; ++k)
            if (w[k] & ~o.w[k]) return false;
        return true;
    }

    // Total order used for canonical translates: the set containing the
    // lowest element where two sets differ is the smaller one.  For sets of
    // equal size this matches lexicographic order on the sorted element lists.
    static bool lex_less(const Bits& a, const Bits& b) {
        for (int k = 0; k < word_count; ++k) {
            std::uint64_t d = a.w[k] ^ b.w[k];
            if (d) return (a.w[k] >> std::countr_zero(d)) & 1u;
        }
        return false;
    }
};

}  // namespace sfactor
