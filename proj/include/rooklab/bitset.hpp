#ifndef ROOKLAB_BITSET_HPP
#define ROOKLAB_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rooklab {

/// Fixed-width dynamic bitset used by the search kernels.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    void set(std::size_t i) { words_[i >> 6] |= bit(i); }
    void reset(std::size_t i) { words_[i >> 6] &= ~bit(i); }
    bool test(std::size_t i) const { return (words_[i >> 6] & bit(i)) != 0; }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    /// |*this & other| without materializing the intersection.
    std::size_t count_and(const Bitset& other) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
        return c;
    }

    bool intersects(const Bitset& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    Bitset& and_not(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend bool operator==(const Bitset&, const Bitset&) = default;

    /// Index of the lowest set bit, or size() when empty.
    std::size_t first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return (k << 6) + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return bits_;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                fn((k << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i & 63); }
    void trim() {
        if (bits_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace rooklab

#endif
