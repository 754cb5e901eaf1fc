#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace tubings {

/// Fixed-capacity bitset over the element universe C_G of one host graph:
/// bit i < node_count() is a node, the remaining bits are bundle-edge labels.
class ElementSet {
public:
    static constexpr std::size_t kCapacity = 128;

    constexpr ElementSet() = default;

    static ElementSet single(std::size_t i) {
        ElementSet s;
        s.set(i);
        return s;
    }
    /// Bits [0, n).
    static ElementSet prefix(std::size_t n) {
        ElementSet s;
        for (std::size_t w = 0; w < kWords; ++w) {
            const std::size_t lo = w * 64;
            if (n >= lo + 64) s.words_[w] = ~std::uint64_t{0};
            else if (n > lo) s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
        }
        return s;
    }

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool odd() const {
        std::uint64_t x = 0;
        for (auto w : words_) x ^= w;
        return std::popcount(x) & 1;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    /// Lowest set bit, or kCapacity when empty.
    std::size_t first() const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return kCapacity;
    }
    bool intersects(const ElementSet& o) const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }
    bool subset_of(const ElementSet& o) const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    /// Calls f(i) for each set bit in increasing order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < kWords; ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                const int b = std::countr_zero(x);
                f(w * 64 + static_cast<std::size_t>(b));
                x &= x - 1;
            }
        }
    }

    ElementSet& operator|=(const ElementSet& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    ElementSet& operator&=(const ElementSet& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    ElementSet& operator-=(const ElementSet& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;
    /// Arbitrary total order on the raw words, for sorting and dedup only.
    friend auto operator<=>(const ElementSet& a, const ElementSet& b) {
        for (std::size_t w = kWords; w-- > 0;)
            if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
        return std::strong_ordering::equal;
    }

    std::size_t hash() const {
        std::size_t h = 0;
        for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    static constexpr std::size_t kWords = kCapacity / 64;
    std::array<std::uint64_t, kWords> words_{};
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace tubings
