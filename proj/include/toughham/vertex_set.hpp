#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace toughham {

/// Hard capacity of every graph in the library: two 64-bit words per adjacency row.
inline constexpr int kMaxVertices = 128;

/// Fixed-capacity bitset over vertex ids 0..127.
class VertexSet {
public:
    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) insert(v);
    }

    static VertexSet range(int n) {
        VertexSet s;
        for (int w = 0; w < kWords; ++w) {
            int lo = w * 64;
            if (n >= lo + 64) {
                s.words_[w] = ~std::uint64_t{0};
            } else if (n > lo) {
                s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
            }
        }
        return s;
    }

    static VertexSet from(const std::vector<int>& vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }

    void insert(int v) { words_[v >> 6] |= bit(v); }
    void erase(int v) { words_[v >> 6] &= ~bit(v); }
    [[nodiscard]] bool contains(int v) const { return (words_[v >> 6] & bit(v)) != 0; }

    [[nodiscard]] int size() const {
        int total = 0;
        for (auto w : words_) total += std::popcount(w);
        return total;
    }
    [[nodiscard]] bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    [[nodiscard]] int first() const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    /// Smallest member strictly greater than v, or -1.
    [[nodiscard]] int next(int v) const {
        int start = v + 1;
        if (start >= kMaxVertices) return -1;
        int w = start >> 6;
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (start & 63));
        while (true) {
            if (word != 0) return w * 64 + std::countr_zero(word);
            if (++w >= kWords) return -1;
            word = words_[w];
        }
    }

    [[nodiscard]] bool intersects(const VertexSet& other) const {
        for (int w = 0; w < kWords; ++w)
            if ((words_[w] & other.words_[w]) != 0) return true;
        return false;
    }
    [[nodiscard]] bool is_subset_of(const VertexSet& other) const {
        for (int w = 0; w < kWords; ++w)
            if ((words_[w] & ~other.words_[w]) != 0) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t word = words_[w];
            while (word != 0) {
                fn(w * 64 + std::countr_zero(word));
                word &= word - 1;
            }
        }
    }

    [[nodiscard]] std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    /// "{0,3,5}"
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] std::uint64_t word(int i) const { return words_[i]; }
    [[nodiscard]] std::size_t hash() const {
        return std::hash<std::uint64_t>{}(words_[0] * 0x9e3779b97f4a7c15ULL ^ words_[1]);
    }

private:
    static constexpr int kWords = kMaxVertices / 64;
    static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }

    std::array<std::uint64_t, kWords> words_{};
};

/// Lexicographic order on the ascending member lists ({0,2} < {0,3} < {1}).
bool lex_less(const VertexSet& a, const VertexSet& b);

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace toughham
