#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eo {

/// Fixed-length bit string of arbitrary size, packed into 64-bit words.
///
/// Position 0 is the leftmost character of the textual form (variable 1 of a
/// signature row). Ordering is lexicographic on that textual form, so sorted
/// supports print in the natural order.
class BitVector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t size, bool value = false);

    /// Parses a string of '0'/'1' characters; throws ParseError otherwise.
    static BitVector from_string(std::string_view bits);
    /// The low `size` bits of `word`, bit 0 at position 0.
    static BitVector from_word(Word word, std::size_t size);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool test(std::size_t pos) const noexcept {
        return (words_[pos / kWordBits] >> (pos % kWordBits)) & 1U;
    }
    void set(std::size_t pos, bool value = true) noexcept {
        const Word mask = Word{1} << (pos % kWordBits);
        if (value) {
            words_[pos / kWordBits] |= mask;
        } else {
            words_[pos / kWordBits] &= ~mask;
        }
    }

    std::size_t weight() const noexcept;
    bool all() const noexcept { return weight() == size_; }
    bool none() const noexcept;

    /// Bitwise complement of every position.
    BitVector operator~() const;
    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

    /// Parity of the AND of two equal-length vectors (GF(2) inner product).
    bool dot(const BitVector& other) const;

    BitVector concat(const BitVector& tail) const;
    /// Copy with position `pos` removed.
    BitVector erase(std::size_t pos) const;
    /// The bits at the given positions, in the given order.
    BitVector select(std::span<const std::size_t> positions) const;
    /// Concatenation of `m` copies.
    BitVector repeat(std::size_t m) const;

    std::string to_string() const;
    std::span<const Word> words() const noexcept { return words_; }
    /// Only valid for size() <= 64.
    Word to_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

    friend bool operator==(const BitVector& a, const BitVector& b) noexcept {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }
    friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) noexcept;

    std::size_t hash() const noexcept;

private:
    void clear_tail() noexcept;

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

} // namespace eo

template <>
struct std::hash<eo::BitVector> {
    std::size_t operator()(const eo::BitVector& v) const noexcept { return v.hash(); }
};
