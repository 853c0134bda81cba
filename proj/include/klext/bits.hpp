#pragma once

// Fixed-width bit strings stored in the low bits of a uint64_t, plus the
// combinatorial helpers used by the enumeration oracles.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace klext {

using u64 = std::uint64_t;

inline constexpr u64 width_mask(int width) {
    return width >= 64 ? ~u64{0} : (u64{1} << width) - 1;
}

inline constexpr u64 domain_size(int width) {
    if (width < 0 || width > 63) throw std::invalid_argument("domain_size: width out of range");
    return u64{1} << width;
}

inline int popcount64(u64 x) { return __builtin_popcountll(x); }

inline u64 get_bits(u64 x, int lo, int count) {
    return (x >> lo) & width_mask(count);
}

// Packs hi into the top bits: value = hi * 2^lo_width + lo.
inline u64 pack_bits(u64 hi, u64 lo, int lo_width) {
    return (hi << lo_width) | (lo & width_mask(lo_width));
}

// Hex I/O convention: most-significant bit first, width always explicit.
inline std::string to_hex(u64 x, int width) {
    int digits = (width + 3) / 4;
    if (digits == 0) digits = 1;
    static const char* k = "0123456789abcdef";
    std::string s(static_cast<size_t>(digits), '0');
    for (int i = digits - 1; i >= 0; --i) {
        s[static_cast<size_t>(i)] = k[x & 0xf];
        x >>= 4;
    }
    return s;
}

inline u64 from_hex(const std::string& s, int width) {
    u64 v = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw std::invalid_argument("from_hex: bad digit");
        v = (v << 4) | static_cast<u64>(d);
    }
    if (width < 64 && v > width_mask(width)) throw std::invalid_argument("from_hex: value exceeds width");
    return v;
}

// C(n, k) saturating at cap+1 so callers can test "count <= cap" without overflow.
inline u64 binomial_capped(u64 n, u64 k, u64 cap) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    u64 r = 1;
    for (u64 i = 1; i <= k; ++i) {
        // r * (n - k + i) / i is always integral at this point
        u64 num = n - k + i;
        if (r > (cap + 1) / num * i + i) return cap + 1;
        r = r / i * num + (r % i) * num / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

inline double binomial_double(u64 n, u64 k) {
    if (k > n) return 0.0;
    if (k > n - k) k = n - k;
    double r = 1.0;
    for (u64 i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

// Lexicographically next k-subset of {0,...,n-1} given as sorted positions.
// Returns false once the last subset has been passed.
inline bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] < n - k + i) {
            ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

// Gosper's hack: next integer with the same popcount. Masks only, n <= 63.
inline u64 next_same_popcount(u64 v) {
    u64 c = v & (0 - v);
    u64 r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

// Index of a k-subset mask in colex.. we use the combinadic (lexicographic by
// sorted positions) unranking instead, to split enumeration across threads.
inline u64 combination_unrank(u64 rank, int n, int k, u64 cap) {
    // returns the mask of the rank-th k-subset of {0..n-1} in lexicographic
    // order of sorted position vectors
    u64 mask = 0;
    int pos = 0;
    for (int i = 0; i < k; ++i) {
        for (;; ++pos) {
            u64 c = binomial_capped(static_cast<u64>(n - pos - 1), static_cast<u64>(k - i - 1), cap);
            if (rank < c) break;
            rank -= c;
        }
        mask |= u64{1} << pos;
        ++pos;
    }
    return mask;
}

}  // namespace klext
