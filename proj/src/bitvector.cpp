#include "eo/bitvector.hpp"

#include <algorithm>
#include <bit>

#include "eo/error.hpp"

namespace eo {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + BitVector::kWordBits - 1) / BitVector::kWordBits; }

} // namespace

BitVector::BitVector(std::size_t size, bool value)
    : size_(size), words_(words_for(size), value ? ~Word{0} : Word{0}) {
    clear_tail();
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw ParseError("invalid bit character '" + std::string(1, bits[i]) + "'");
        }
    }
    return v;
}

BitVector BitVector::from_word(Word word, std::size_t size) {
    BitVector v(size);
    if (size > 0) {
        v.words_[0] = word;
        v.clear_tail();
    }
    return v;
}

void BitVector::clear_tail() noexcept {
    const std::size_t rem = size_ % kWordBits;
    if (rem != 0) {
        words_.back() &= (Word{1} << rem) - 1;
    }
}

std::size_t BitVector::weight() const noexcept {
    std::size_t w = 0;
    for (Word word : words_) {
        w += static_cast<std::size_t>(std::popcount(word));
    }
    return w;
}

bool BitVector::none() const noexcept {
    for (Word word : words_) {
        if (word != 0) {
            return false;
        }
    }
    return true;
}

BitVector BitVector::operator~() const {
    BitVector out = *this;
    for (Word& word : out.words_) {
        word = ~word;
    }
    out.clear_tail();
    return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) {
        throw PreconditionError("xor of bit vectors of different lengths");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.size_ != size_) {
        throw PreconditionError("inner product of bit vectors of different lengths");
    }
    Word acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        acc ^= words_[i] & other.words_[i];
    }
    return std::popcount(acc) & 1;
}

BitVector BitVector::concat(const BitVector& tail) const {
    BitVector out(size_ + tail.size_);
    if (size_ % kWordBits == 0) {
        std::copy(words_.begin(), words_.end(), out.words_.begin());
        std::copy(tail.words_.begin(), tail.words_.end(), out.words_.begin() + static_cast<std::ptrdiff_t>(words_.size()));
        return out;
    }
    std::copy(words_.begin(), words_.end(), out.words_.begin());
    for (std::size_t i = 0; i < tail.size_; ++i) {
        if (tail.test(i)) {
            out.set(size_ + i);
        }
    }
    return out;
}

BitVector BitVector::erase(std::size_t pos) const {
    BitVector out(size_ - 1);
    for (std::size_t i = 0, j = 0; i < size_; ++i) {
        if (i == pos) {
            continue;
        }
        if (test(i)) {
            out.set(j);
        }
        ++j;
    }
    return out;
}

BitVector BitVector::select(std::span<const std::size_t> positions) const {
    BitVector out(positions.size());
    for (std::size_t j = 0; j < positions.size(); ++j) {
        if (test(positions[j])) {
            out.set(j);
        }
    }
    return out;
}

BitVector BitVector::repeat(std::size_t m) const {
    BitVector out;
    for (std::size_t c = 0; c < m; ++c) {
        out = out.concat(*this);
    }
    return out;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (test(i)) {
            s[i] = '1';
        }
    }
    return s;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) noexcept {
    const std::size_t common = std::min(a.size_, b.size_);
    const std::size_t full = common / BitVector::kWordBits;
    for (std::size_t w = 0; w < full; ++w) {
        const BitVector::Word diff = a.words_[w] ^ b.words_[w];
        if (diff != 0) {
            const int pos = std::countr_zero(diff);
            return ((a.words_[w] >> pos) & 1U) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    for (std::size_t i = full * BitVector::kWordBits; i < common; ++i) {
        if (a.test(i) != b.test(i)) {
            return a.test(i) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return a.size_ <=> b.size_;
}

std::size_t BitVector::hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(size_);
    for (Word word : words_) {
        h ^= std::hash<Word>{}(word) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace eo
