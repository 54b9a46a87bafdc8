#include "qmetro/bits.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmetro {

BitVector BitVector::from_indices(std::size_t size, std::initializer_list<std::size_t> ones) {
    return from_indices(size, std::span<const std::size_t>(ones.begin(), ones.size()));
}

BitVector BitVector::from_indices(std::size_t size, std::span<const std::size_t> ones) {
    BitVector v(size);
    for (std::size_t i : ones) {
        if (i >= size) {
            throw std::out_of_range("BitVector index " + std::to_string(i) + " out of range");
        }
        v.set(i);
    }
    return v;
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return v;
}

static void require_same_size(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("bit vector size mismatch: " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
    }
}

BitVector& BitVector::operator^=(const BitVector& other) {
    require_same_size(*this, other);
    xor_words(words_, other.words_);
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    require_same_size(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
    require_same_size(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

bool BitVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVector::popcount() const {
    std::size_t total = 0;
    for (Word w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool BitVector::dot(const BitVector& other) const {
    require_same_size(*this, other);
    Word acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        acc ^= words_[i] & other.words_[i];
    }
    return (std::popcount(acc) & 1) != 0;
}

std::vector<std::size_t> BitVector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        Word bits = words_[w];
        while (bits != 0) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

bool operator<(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.get(i) != b.get(i)) {
            return b.get(i);
        }
    }
    return false;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::span<const BitVector> rows) {
    BitMatrix m(0, cols);
    for (const auto& r : rows) {
        m.append_row(r);
    }
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    if (rows.size() == 0) {
        return {};
    }
    BitMatrix m(0, rows.begin()->size());
    for (auto r : rows) {
        m.append_row(BitVector::from_string(r));
    }
    return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i);
    }
    return m;
}

BitVector BitMatrix::row_vector(std::size_t r) const {
    BitVector v(cols_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
    return v;
}

void BitMatrix::xor_rows(std::size_t dst, std::size_t src) {
    Word* d = data_.data() + dst * stride_;
    const Word* s = data_.data() + src * stride_;
    for (std::size_t i = 0; i < stride_; ++i) {
        d[i] ^= s[i];
    }
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

void BitMatrix::append_row(const BitVector& v) {
    if (v.size() != cols_) {
        throw std::invalid_argument("append_row: expected " + std::to_string(cols_) + " bits, got " +
                                    std::to_string(v.size()));
    }
    data_.insert(data_.end(), v.words().begin(), v.words().end());
    ++rows_;
}

void BitMatrix::truncate_rows(std::size_t count) {
    if (count < rows_) {
        rows_ = count;
        data_.resize(rows_ * stride_);
    }
}

bool BitMatrix::row_is_zero(std::size_t r) const {
    auto w = row(r);
    return std::all_of(w.begin(), w.end(), [](Word x) { return x == 0; });
}

BitVector BitMatrix::multiply(const BitVector& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("multiply: dimension mismatch");
    }
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Word acc = 0;
        auto w = row(r);
        auto x = v.words();
        for (std::size_t i = 0; i < stride_; ++i) {
            acc ^= w[i] & x[i];
        }
        if (std::popcount(acc) & 1) {
            out.set(r);
        }
    }
    return out;
}

BitVector BitMatrix::combine_rows(const BitVector& selection) const {
    if (selection.size() != rows_) {
        throw std::invalid_argument("combine_rows: selection has wrong length");
    }
    BitVector out(cols_);
    for (std::size_t r : selection.ones()) {
        xor_words(out.words(), row(r));
    }
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                t.set(c, r);
            }
        }
    }
    return t;
}

}  // namespace qmetro
