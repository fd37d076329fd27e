#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace surfdeform {

// Dense bit vector over 64-bit words. Patches top out at a few thousand
// qubits, so dense storage wins over anything sparse.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void resize(std::size_t n) {
        n_ = n;
        words_.resize((n + 63) / 64, 0);
        trim();
    }

    void clear() { for (auto& w : words_) w = 0; }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::size_t(std::popcount(w));
        return c;
    }

    void xor_with(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    }

    // Parity of |this AND o|.
    bool overlap_parity(const BitVec& o) const {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
        return std::popcount(acc) & 1;
    }

    std::size_t overlap_count(const BitVec& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::size_t(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    // Index of the lowest set bit, or size() if none.
    std::size_t lowest_set() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return i * 64 + std::size_t(std::countr_zero(words_[i]));
        return n_;
    }

    bool operator==(const BitVec& o) const { return n_ == o.n_ && words_ == o.words_; }

    // Total order: lowest differing bit index decides, set bit sorts first.
    std::strong_ordering operator<=>(const BitVec& o) const {
        for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) {
            std::uint64_t d = words_[i] ^ o.words_[i];
            if (d) {
                std::size_t b = std::size_t(std::countr_zero(d));
                bool mine = (words_[i] >> b) & 1u;
                return mine ? std::strong_ordering::less : std::strong_ordering::greater;
            }
        }
        return n_ <=> o.n_;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void trim() {
        if (n_ & 63) {
            std::uint64_t mask = (std::uint64_t(1) << (n_ & 63)) - 1;
            if (!words_.empty()) words_.back() &= mask;
        }
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace surfdeform
