#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace indcx {

// Fixed-width set of vertex indices. Faces, induced subsets and neighborhoods
// of indexed graphs are all stored this way.
class VertexSet {
public:
    static constexpr std::size_t capacity = 128;

    constexpr VertexSet() = default;

    static constexpr VertexSet singleton(std::size_t i) {
        VertexSet s;
        s.set(i);
        return s;
    }

    // {0, ..., n-1}
    static constexpr VertexSet prefix(std::size_t n) {
        VertexSet s;
        for (std::size_t w = 0; w < words_; ++w) {
            std::size_t lo = w * 64;
            if (n >= lo + 64)
                s.bits_[w] = ~std::uint64_t{0};
            else if (n > lo)
                s.bits_[w] = (std::uint64_t{1} << (n - lo)) - 1;
        }
        return s;
    }

    constexpr bool test(std::size_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1u; }
    constexpr void set(std::size_t i) { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    constexpr void reset(std::size_t i) { bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    constexpr void flip(std::size_t i) { bits_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    constexpr bool empty() const { return (bits_[0] | bits_[1]) == 0; }
    constexpr int count() const { return std::popcount(bits_[0]) + std::popcount(bits_[1]); }

    // Index of the lowest member; capacity if empty.
    constexpr std::size_t first() const {
        if (bits_[0]) return static_cast<std::size_t>(std::countr_zero(bits_[0]));
        if (bits_[1]) return 64 + static_cast<std::size_t>(std::countr_zero(bits_[1]));
        return capacity;
    }

    // Number of members strictly below i.
    constexpr int rank(std::size_t i) const {
        VertexSet below = *this & prefix(i);
        return below.count();
    }

    constexpr bool intersects(const VertexSet& o) const {
        return ((bits_[0] & o.bits_[0]) | (bits_[1] & o.bits_[1])) != 0;
    }
    constexpr bool subset_of(const VertexSet& o) const { return (*this & ~o).empty(); }

    constexpr VertexSet operator|(const VertexSet& o) const { return {bits_[0] | o.bits_[0], bits_[1] | o.bits_[1]}; }
    constexpr VertexSet operator&(const VertexSet& o) const { return {bits_[0] & o.bits_[0], bits_[1] & o.bits_[1]}; }
    constexpr VertexSet operator^(const VertexSet& o) const { return {bits_[0] ^ o.bits_[0], bits_[1] ^ o.bits_[1]}; }
    constexpr VertexSet operator~() const { return {~bits_[0], ~bits_[1]}; }
    constexpr VertexSet operator-(const VertexSet& o) const { return *this & ~o; }
    constexpr VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
    constexpr VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
    constexpr VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }

    constexpr bool operator==(const VertexSet&) const = default;
    constexpr bool operator<(const VertexSet& o) const {
        return bits_[1] != o.bits_[1] ? bits_[1] < o.bits_[1] : bits_[0] < o.bits_[0];
    }

    template <class F>
    constexpr void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t b = bits_[w];
            while (b) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(b)));
                b &= b - 1;
            }
        }
    }

    std::size_t hash() const {
        std::uint64_t h = bits_[0] * 0x9E3779B97F4A7C15ull;
        h ^= (bits_[1] + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2));
        h ^= h >> 31;
        return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ull);
    }

private:
    static constexpr std::size_t words_ = 2;
    constexpr VertexSet(std::uint64_t lo, std::uint64_t hi) : bits_{lo, hi} {}
    std::array<std::uint64_t, words_> bits_{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace indcx
