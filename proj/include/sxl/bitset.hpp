#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>

namespace sxl {

/// Fixed-width bitset over `Words` machine words, enough for one adjacency
/// row. Word count is a compile-time choice so the common case (<= 64
/// vertices) stays a single register.
template <unsigned Words>
struct Bitset {
    static constexpr int capacity = 64 * static_cast<int>(Words);

    std::array<std::uint64_t, Words> w{};

    constexpr bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    constexpr void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    constexpr void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    constexpr int count() const {
        int c = 0;
        for (auto word : w) c += std::popcount(word);
        return c;
    }

    constexpr bool any() const {
        for (auto word : w)
            if (word) return true;
        return false;
    }
    constexpr bool none() const { return !any(); }

    /// Index of the lowest set bit, or -1 when empty.
    constexpr int lowest() const {
        for (unsigned k = 0; k < Words; ++k)
            if (w[k]) return 64 * static_cast<int>(k) + std::countr_zero(w[k]);
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (unsigned k = 0; k < Words; ++k) {
            std::uint64_t word = w[k];
            while (word) {
                int i = std::countr_zero(word);
                f(64 * static_cast<int>(k) + i);
                word &= word - 1;
            }
        }
    }

    friend constexpr Bitset operator&(Bitset a, const Bitset& b) {
        for (unsigned k = 0; k < Words; ++k) a.w[k] &= b.w[k];
        return a;
    }
    friend constexpr Bitset operator|(Bitset a, const Bitset& b) {
        for (unsigned k = 0; k < Words; ++k) a.w[k] |= b.w[k];
        return a;
    }
    friend constexpr Bitset operator^(Bitset a, const Bitset& b) {
        for (unsigned k = 0; k < Words; ++k) a.w[k] ^= b.w[k];
        return a;
    }
    /// a & ~b
    constexpr Bitset minus(const Bitset& b) const {
        Bitset r = *this;
        for (unsigned k = 0; k < Words; ++k) r.w[k] &= ~b.w[k];
        return r;
    }
    constexpr bool intersects(const Bitset& b) const {
        for (unsigned k = 0; k < Words; ++k)
            if (w[k] & b.w[k]) return true;
        return false;
    }
    constexpr bool is_subset_of(const Bitset& b) const {
        for (unsigned k = 0; k < Words; ++k)
            if (w[k] & ~b.w[k]) return false;
        return true;
    }

    /// Mask with bits 0..n-1 set.
    static constexpr Bitset below(int n) {
        Bitset r;
        for (unsigned k = 0; k < Words; ++k) {
            int lo = 64 * static_cast<int>(k);
            if (n <= lo)
                r.w[k] = 0;
            else if (n - lo >= 64)
                r.w[k] = ~std::uint64_t{0};
            else
                r.w[k] = (std::uint64_t{1} << (n - lo)) - 1;
        }
        return r;
    }

    friend constexpr bool operator==(const Bitset&, const Bitset&) = default;
    friend constexpr auto operator<=>(const Bitset& a, const Bitset& b) {
        return a.w <=> b.w;
    }
};

} // namespace sxl
