#ifndef RADMAX_BITSET_HPP
#define RADMAX_BITSET_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace radmax {

// Compile-time cap on graph order. Override with -DRADMAX_GRAPH_ORDER_CAP=N.
#ifdef RADMAX_GRAPH_ORDER_CAP
inline constexpr int kOrderCap = RADMAX_GRAPH_ORDER_CAP;
#else
inline constexpr int kOrderCap = 512;
#endif

/// Fixed-capacity vertex set, one bit per vertex id, packed into machine words.
/// All operations run over the full word array; unused high bits stay zero.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr int kWords = (kOrderCap + 63) / 64;

    VertexSet() = default;

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= Word{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(Word{1} << (i & 63)); }

    void clear() { w_.fill(0); }

    bool any() const {
        for (Word w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (Word w : w_) c += std::popcount(w);
        return c;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
        return *this;
    }
    /// this := this & ~o
    VertexSet& subtract(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Calls f(i) for every set bit, in increasing order.
    template <typename F>
    void for_each(F&& f) const {
        for (int wi = 0; wi < kWords; ++wi) {
            Word w = w_[wi];
            while (w) {
                f(wi * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    std::array<Word, kWords> w_{};
};

} // namespace radmax

#endif
