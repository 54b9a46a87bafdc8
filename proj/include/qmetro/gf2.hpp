#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qmetro/bits.hpp"

namespace qmetro {

struct RowEchelon {
    BitMatrix matrix;                 // reduced row-echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row of `matrix`
    std::size_t rank = 0;
};

/// Gauss-Jordan elimination over GF(2). The returned matrix keeps only its
/// `rank` nonzero rows.
RowEchelon rref(BitMatrix m);

std::size_t rank(const BitMatrix& m);

/// Returns a selection of rows of `m` (one bit per row) whose sum is `v`, or
/// nullopt when `v` is not in the row space. Throws std::invalid_argument when
/// v.size() != m.cols().
std::optional<BitVector> in_row_space(const BitMatrix& m, const BitVector& v);

/// Basis of {v : m·v = 0}, one basis vector per row; cols - rank rows.
BitMatrix kernel_basis(const BitMatrix& m);

/// Precomputed reduced row space supporting O(weight) membership tests.
///
/// In fully reduced echelon form the only candidate representation of v is the
/// sum of the rows whose pivot columns are set in v, so membership needs one
/// XOR per set pivot bit and a final comparison.
class RowSpace {
public:
    RowSpace() = default;
    /// With `track_combinations`, combination() can report which generator rows
    /// sum to a member vector.
    explicit RowSpace(const BitMatrix& generators, bool track_combinations = false);

    std::size_t cols() const { return echelon_.matrix.cols(); }
    std::size_t rank() const { return echelon_.rank; }
    const RowEchelon& echelon() const { return echelon_; }

    /// Row index whose pivot is column c, or npos.
    std::size_t pivot_row(std::size_t c) const { return pivot_row_[c]; }
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool contains(const BitVector& v) const;
    /// Sum of the echelon rows whose pivots are set in v (the unique candidate).
    BitVector project(const BitVector& v) const;
    /// Generator rows (one bit per original row) summing to v, or nullopt.
    /// Requires construction with track_combinations.
    std::optional<BitVector> combination(const BitVector& v) const;

private:
    RowEchelon echelon_;
    std::vector<std::size_t> pivot_row_;
    BitMatrix transform_;  // rank × original rows; row r of echelon = transform_.row(r) · generators
    bool tracked_ = false;
};

}  // namespace qmetro
