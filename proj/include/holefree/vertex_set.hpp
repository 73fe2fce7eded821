#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace holefree {

using Vertex = int;

/// Fixed-capacity bitset over the vertices 0..capacity-1.
///
/// Ordering (`operator<=>`) compares the sorted element lists
/// lexicographically, so `{0,5} < {1,2}` and `{0} < {0,1}`. Every family in the
/// library is sorted with this order.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr int kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(int capacity) : capacity_(capacity), words_(word_count(capacity), 0) {}
    VertexSet(int capacity, std::initializer_list<Vertex> members) : VertexSet(capacity) {
        for (Vertex v : members) insert(v);
    }

    static VertexSet full(int capacity) {
        VertexSet s(capacity);
        for (auto& w : s.words_) w = ~Word{0};
        s.trim();
        return s;
    }
    static VertexSet singleton(int capacity, Vertex v) {
        VertexSet s(capacity);
        s.insert(v);
        return s;
    }

    int capacity() const noexcept { return capacity_; }

    bool contains(Vertex v) const noexcept {
        assert(v >= 0 && v < capacity_);
        return (words_[static_cast<std::size_t>(v) / kWordBits] >> (v % kWordBits)) & 1u;
    }
    void insert(Vertex v) noexcept {
        assert(v >= 0 && v < capacity_);
        words_[static_cast<std::size_t>(v) / kWordBits] |= Word{1} << (v % kWordBits);
    }
    void erase(Vertex v) noexcept {
        assert(v >= 0 && v < capacity_);
        words_[static_cast<std::size_t>(v) / kWordBits] &= ~(Word{1} << (v % kWordBits));
    }
    void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

    int size() const noexcept {
        int c = 0;
        for (Word w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }

    /// Smallest member, or -1 when empty.
    Vertex first() const noexcept { return next(0); }
    /// Smallest member >= from, or -1.
    Vertex next(Vertex from) const noexcept {
        if (from >= capacity_) return -1;
        std::size_t i = static_cast<std::size_t>(from) / kWordBits;
        Word w = words_[i] & (~Word{0} << (from % kWordBits));
        while (true) {
            if (w != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(w));
            if (++i == words_.size()) return -1;
            w = words_[i];
        }
    }

    VertexSet& operator|=(const VertexSet& o) noexcept {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) noexcept {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) noexcept {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Complement within 0..capacity-1.
    VertexSet operator~() const {
        VertexSet s(*this);
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    bool is_subset_of(const VertexSet& o) const noexcept {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const noexcept {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    int intersection_size(const VertexSet& o) const noexcept {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    /// Same members, different capacity. Members >= new capacity are dropped.
    VertexSet resized(int capacity) const {
        VertexSet s(capacity);
        for (std::size_t i = 0; i < std::min(words_.size(), s.words_.size()); ++i) s.words_[i] = words_[i];
        s.trim();
        return s;
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (Vertex v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w) {
                f(static_cast<Vertex>(i * kWordBits + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    bool operator==(const VertexSet& o) const noexcept = default;

    std::strong_ordering operator<=>(const VertexSet& o) const noexcept {
        Vertex a = first(), b = o.first();
        while (a >= 0 && b >= 0) {
            if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
            a = next(a + 1);
            b = o.next(b + 1);
        }
        if (a < 0 && b < 0) return capacity_ <=> o.capacity_;
        return a < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    std::size_t hash() const noexcept {
        std::size_t h = static_cast<std::size_t>(capacity_) * 0x9E3779B97F4A7C15ull;
        for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        return h;
    }

    const std::vector<Word>& words() const noexcept { return words_; }

private:
    static std::size_t word_count(int capacity) {
        return static_cast<std::size_t>((capacity + kWordBits - 1) / kWordBits);
    }
    void trim() noexcept {
        if (capacity_ % kWordBits != 0 && !words_.empty())
            words_.back() &= (Word{1} << (capacity_ % kWordBits)) - 1;
    }

    int capacity_ = 0;
    std::vector<Word> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

/// Sorts and removes duplicates.
inline void canonicalize(std::vector<VertexSet>& family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

inline std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
    os << '{';
    bool first = true;
    s.for_each([&](Vertex v) {
        if (!first) os << ',';
        os << v;
        first = false;
    });
    return os << '}';
}

}  // namespace holefree
