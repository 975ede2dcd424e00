#pragma once

/**
 * @file element_set.hpp
 * @brief Fixed-capacity bitset over the elements of a finite ring.
 *
 * Elements of a ring of order n are the dense indices 0..n-1. Every subset the
 * library manipulates (ideals, multiplicative sets, kernels, unit groups) is an
 * ElementSet. The capacity is fixed at kMaxOrder bits so sets never allocate.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace orelab {

/// Element index inside a finite ring.
using Elem = std::uint16_t;

/// Hard upper limit on ring order (the bitset capacity).
inline constexpr std::size_t kMaxOrder = 256;

class ElementSet
{
    public:
        using Word = std::uint64_t;
        static constexpr std::size_t bits_per_word = 64;
        static constexpr std::size_t words = kMaxOrder / bits_per_word;

        ElementSet() = default;

        /// Empty set over a universe of n elements.
        explicit ElementSet(std::size_t n) : size_(static_cast<std::uint16_t>(n))
        {
            assert(n <= kMaxOrder);
        }

        ElementSet(std::size_t n, std::initializer_list<Elem> members) : ElementSet(n)
        {
            for (auto e : members)
                insert(e);
        }

        static ElementSet full(std::size_t n)
        {
            ElementSet s(n);
            for (std::size_t w = 0; w < words; ++w) {
                std::size_t lo = w * bits_per_word;
                if (lo >= n)
                    break;
                std::size_t hi = std::min(n, lo + bits_per_word);
                std::size_t cnt = hi - lo;
                s.bits_[w] = cnt == bits_per_word ? ~Word{0} : ((Word{1} << cnt) - 1);
            }
            return s;
        }

        template <typename Range>
        static ElementSet from_range(std::size_t n, const Range& r)
        {
            ElementSet s(n);
            for (auto e : r)
                s.insert(static_cast<Elem>(e));
            return s;
        }

        /// Universe size n (not the cardinality).
        std::size_t universe() const { return size_; }

        bool contains(std::size_t e) const
        {
            return (bits_[e / bits_per_word] >> (e % bits_per_word)) & Word{1};
        }

        void insert(std::size_t e)
        {
            assert(e < size_);
            bits_[e / bits_per_word] |= Word{1} << (e % bits_per_word);
        }

        void erase(std::size_t e) { bits_[e / bits_per_word] &= ~(Word{1} << (e % bits_per_word)); }

        std::size_t count() const
        {
            std::size_t c = 0;
            for (auto w : bits_)
                c += static_cast<std::size_t>(std::popcount(w));
            return c;
        }

        bool empty() const
        {
            return std::all_of(bits_.begin(), bits_.end(), [](Word w) { return w == 0; });
        }

        bool is_subset_of(const ElementSet& o) const
        {
            for (std::size_t w = 0; w < words; ++w)
                if (bits_[w] & ~o.bits_[w])
                    return false;
            return true;
        }

        bool intersects(const ElementSet& o) const
        {
            for (std::size_t w = 0; w < words; ++w)
                if (bits_[w] & o.bits_[w])
                    return true;
            return false;
        }

        ElementSet& operator|=(const ElementSet& o)
        {
            for (std::size_t w = 0; w < words; ++w)
                bits_[w] |= o.bits_[w];
            return *this;
        }

        ElementSet& operator&=(const ElementSet& o)
        {
            for (std::size_t w = 0; w < words; ++w)
                bits_[w] &= o.bits_[w];
            return *this;
        }

        /// Set difference.
        ElementSet& operator-=(const ElementSet& o)
        {
            for (std::size_t w = 0; w < words; ++w)
                bits_[w] &= ~o.bits_[w];
            return *this;
        }

        friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
        friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
        friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

        ElementSet complement() const { return full(size_) - *this; }

        friend bool operator==(const ElementSet& a, const ElementSet& b)
        {
            return a.size_ == b.size_ && a.bits_ == b.bits_;
        }

        /// Smallest member, or universe() if empty.
        std::size_t first() const { return next(0); }

        /// Smallest member >= from, or universe() if none.
        std::size_t next(std::size_t from) const
        {
            for (std::size_t w = from / bits_per_word; w < words; ++w) {
                Word m = bits_[w];
                if (w == from / bits_per_word)
                    m &= ~Word{0} << (from % bits_per_word);
                if (m)
                    return w * bits_per_word + static_cast<std::size_t>(std::countr_zero(m));
            }
            return size_;
        }

        template <typename F>
        void for_each(F&& f) const
        {
            for (std::size_t w = 0; w < words; ++w) {
                Word m = bits_[w];
                while (m) {
                    auto b = static_cast<std::size_t>(std::countr_zero(m));
                    f(static_cast<Elem>(w * bits_per_word + b));
                    m &= m - 1;
                }
            }
        }

        std::vector<Elem> elements() const
        {
            std::vector<Elem> out;
            out.reserve(count());
            for_each([&](Elem e) { out.push_back(e); });
            return out;
        }

        const std::array<Word, words>& raw() const { return bits_; }

        std::size_t hash() const
        {
            std::size_t h = size_;
            for (auto w : bits_)
                h = h * 0x9E3779B97F4A7C15ull ^ (w + (h >> 7));
            return h;
        }

    private:
        std::array<Word, words> bits_{};
        std::uint16_t size_ = 0;
};

/**
 * Canonical order on sets: by cardinality, then by the sorted member lists
 * compared lexicographically. All list outputs of the library use it.
 */
inline bool canonical_less(const ElementSet& a, const ElementSet& b)
{
    auto ca = a.count(), cb = b.count();
    if (ca != cb)
        return ca < cb;
    std::size_t x = a.first(), y = b.first();
    while (x < a.universe() && y < b.universe()) {
        if (x != y)
            return x < y;
        x = a.next(x + 1);
        y = b.next(y + 1);
    }
    return false;
}

struct ElementSetHash
{
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

} // namespace orelab
