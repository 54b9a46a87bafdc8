#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qmetro {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Fixed-length packed bit vector. Bits past size() are always zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

    static BitVector from_indices(std::size_t size, std::initializer_list<std::size_t> ones);
    static BitVector from_indices(std::size_t size, std::span<const std::size_t> ones);
    /// Parses a string of '0'/'1' characters, bit 0 first.
    static BitVector from_string(std::string_view bits);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value = true) {
        const Word mask = Word{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    BitVector& operator^=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);
    BitVector& operator|=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    bool any() const;
    bool none() const { return !any(); }
    std::size_t popcount() const;
    /// Parity of popcount(a & b).
    bool dot(const BitVector& other) const;
    std::vector<std::size_t> ones() const;

    std::span<Word> words() { return words_; }
    std::span<const Word> words() const { return words_; }

    std::string to_string() const;

    /// Lexicographic order on (size, bit 0, bit 1, ...) treating set bits as larger.
    friend bool operator<(const BitVector& a, const BitVector& b);

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

/// Dense row-major GF(2) matrix with rows packed into machine words.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

    static BitMatrix from_rows(std::size_t cols, std::span<const BitVector> rows);
    /// Rows given as '0'/'1' strings of equal length.
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value = true) {
        Word& w = data_[r * stride_ + c / kWordBits];
        const Word mask = Word{1} << (c % kWordBits);
        w = value ? (w | mask) : (w & ~mask);
    }

    std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
    BitVector row_vector(std::size_t r) const;

    /// row(dst) ^= row(src)
    void xor_rows(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);
    void append_row(const BitVector& v);
    /// Keeps the first `count` rows.
    void truncate_rows(std::size_t count);
    bool row_is_zero(std::size_t r) const;

    /// this · v over GF(2), one output bit per row.
    BitVector multiply(const BitVector& v) const;
    /// Sum of the rows selected by `selection` (one bit per row).
    BitVector combine_rows(const BitVector& selection) const;
    BitMatrix transpose() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

inline void xor_words(std::span<Word> dst, std::span<const Word> src) {
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] ^= src[i];
    }
}

inline bool words_equal(std::span<const Word> a, std::span<const Word> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            return false;
        }
    }
    return true;
}

}  // namespace qmetro
