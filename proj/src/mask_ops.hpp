// Fixed-width bitmask used inside the solvers, templated on word count so
// small boards run on single-word operations.
#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "chessland/board.hpp"

namespace chessland::detail {

template <int W>
struct Mask {
    std::array<uint64_t, W> w{};

    void set(int i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    Mask& operator|=(const Mask& o) {
        for (int i = 0; i < W; ++i) w[i] |= o.w[i];
        return *this;
    }
    Mask& operator&=(const Mask& o) {
        for (int i = 0; i < W; ++i) w[i] &= o.w[i];
        return *this;
    }
    Mask& subtract(const Mask& o) {
        for (int i = 0; i < W; ++i) w[i] &= ~o.w[i];
        return *this;
    }
    friend Mask operator|(Mask a, const Mask& b) { return a |= b; }
    friend Mask operator&(Mask a, const Mask& b) { return a &= b; }
    Mask andnot(const Mask& o) const {
        Mask r = *this;
        return r.subtract(o);
    }
    bool is_subset_of(const Mask& o) const {
        for (int i = 0; i < W; ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    bool intersects(const Mask& o) const {
        for (int i = 0; i < W; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    bool empty() const {
        for (int i = 0; i < W; ++i)
            if (w[i]) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (int i = 0; i < W; ++i) c += std::popcount(w[i]);
        return c;
    }
    int first() const {
        for (int i = 0; i < W; ++i)
            if (w[i]) return i * 64 + std::countr_zero(w[i]);
        return -1;
    }
    template <typename F>
    void for_each(F&& f) const {
        for (int i = 0; i < W; ++i) {
            uint64_t bits = w[i];
            while (bits) {
                f(i * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }
    friend bool operator==(const Mask&, const Mask&) = default;
    uint64_t hash() const {
        uint64_t h = 0x9e3779b97f4a7c15ull;
        for (int i = 0; i < W; ++i) {
            h ^= w[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return h;
    }
};

template <int W>
Mask<W> to_mask(const SquareSet& s) {
    Mask<W> m;
    const auto& words = s.words();
    for (int i = 0; i < W; ++i) m.w[i] = words[i];
    return m;
}

template <int W>
SquareSet to_square_set(const Mask<W>& m) {
    SquareSet s;
    m.for_each([&](int i) { s.set(i); });
    return s;
}

// 128-bit state key: exact for one- and two-word masks (the two-word case
// has at least seven free high bits for the square index, since boards of
// 9..11 use at most 57 bits of the second word); wider masks fall back to a
// double hash whose collision odds are negligible.
struct StateKey {
    uint64_t a = 0, b = 0;
    friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
    size_t operator()(const StateKey& k) const {
        uint64_t h = k.a * 0x9e3779b97f4a7c15ull;
        h ^= (k.b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
        return static_cast<size_t>(h * 0xff51afd7ed558ccdull);
    }
};

template <int W>
StateKey make_state_key(const Mask<W>& m, int sq) {
    if constexpr (W == 1) return {m.w[0], static_cast<uint64_t>(sq)};
    else if constexpr (W == 2) return {m.w[0], m.w[1] | (static_cast<uint64_t>(sq) << 57)};
    else {
        uint64_t h1 = m.hash();
        uint64_t h2 = ~h1 * 0xc2b2ae3d27d4eb4full + static_cast<uint64_t>(sq);
        return {h1 ^ (static_cast<uint64_t>(sq) << 32), h2};
    }
}

// Invokes fn.template operator()<W> with the smallest width holding nsq bits.
template <typename Fn>
decltype(auto) dispatch_mask_width(int nsq, Fn&& fn) {
    if (nsq <= 64) return fn.template operator()<1>();
    if (nsq <= 128) return fn.template operator()<2>();
    if (nsq <= 320) return fn.template operator()<5>();
    return fn.template operator()<kSetWords>();
}

}  // namespace chessland::detail
