#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sgame::detail {

// One bit per subset of {1..n}, indexed by coalition mask. Packed into
// 64-bit words; all bit positions past 2^n stay zero.
class bit_table {
public:
    explicit bit_table(int n)
        : n_(n), size_(std::uint64_t{1} << n), words_((size_ + 63) / 64, 0) {}

    int players() const { return n_; }
    std::uint64_t size() const { return size_; }

    bool test(std::uint64_t x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
    void set(std::uint64_t x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }

    std::uint64_t count() const {
        std::uint64_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_) {
            if (w != 0) return true;
        }
        return false;
    }

    // Smallest set index, or size() when empty.
    std::uint64_t first_set() const {
        for (std::size_t j = 0; j < words_.size(); ++j) {
            if (words_[j] != 0) return (std::uint64_t{j} << 6) + std::countr_zero(words_[j]);
        }
        return size_;
    }

    bit_table& operator&=(const bit_table& o) {
        for (std::size_t j = 0; j < words_.size(); ++j) words_[j] &= o.words_[j];
        return *this;
    }
    bit_table& operator|=(const bit_table& o) {
        for (std::size_t j = 0; j < words_.size(); ++j) words_[j] |= o.words_[j];
        return *this;
    }

    void flip() {
        for (std::size_t j = 0; j < words_.size(); ++j) words_[j] = ~words_[j];
        mask_tail();
    }

    void fill() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        mask_tail();
    }

    // Positions x where variable i (1-based) is set, i.e. bit i-1 of x.
    static bit_table variable_pattern(int n, int i) {
        bit_table t(n);
        const int b = i - 1;
        if (b < 6) {
            for (auto& w : t.words_) w = word_pattern(b);
        } else {
            for (std::size_t j = 0; j < t.words_.size(); ++j) {
                if ((j >> (b - 6)) & 1u) t.words_[j] = ~std::uint64_t{0};
            }
        }
        t.mask_tail();
        return t;
    }

    // Marks every superset of an already-set position: afterwards
    // test(x) is the OR of the original bits over all submasks y of x.
    void close_upward() {
        for (int b = 0; b < n_; ++b) {
            if (b < 6) {
                const std::uint64_t lower = ~word_pattern(b);
                for (auto& w : words_) w |= (w & lower) << (1u << b);
            } else {
                const std::size_t stride = std::size_t{1} << (b - 6);
                for (std::size_t j = 0; j < words_.size(); ++j) {
                    if ((j >> (b - 6)) & 1u) words_[j] |= words_[j ^ stride];
                }
            }
        }
    }

    // Marks every subset of an already-set position: afterwards
    // test(x) is the OR of the original bits over all supermasks y of x.
    void close_downward() {
        for (int b = 0; b < n_; ++b) {
            if (b < 6) {
                const std::uint64_t lower = ~word_pattern(b);
                for (auto& w : words_) w |= (w >> (1u << b)) & lower;
            } else {
                const std::size_t stride = std::size_t{1} << (b - 6);
                for (std::size_t j = 0; j < words_.size(); ++j) {
                    if (!((j >> (b - 6)) & 1u)) words_[j] |= words_[j ^ stride];
                }
            }
        }
    }

private:
    static constexpr std::uint64_t word_pattern(int b) {
        constexpr std::uint64_t p[6] = {
            0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
            0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
        };
        return p[b];
    }

    void mask_tail() {
        if (size_ < 64) words_[0] &= (std::uint64_t{1} << size_) - 1;
    }

    int n_;
    std::uint64_t size_;
    std::vector<std::uint64_t> words_;
};

}  // namespace sgame::detail
