#include "qmetro/gf2.hpp"

#include <stdexcept>
#include <string>

namespace qmetro {

namespace {

// Eliminates in place; applies the same row operations to `shadow` when it is
// non-null (used to track the combination that produced each row).
std::vector<std::size_t> eliminate(BitMatrix& m, BitMatrix* shadow) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
        std::size_t found = next;
        while (found < m.rows() && !m.get(found, c)) {
            ++found;
        }
        if (found == m.rows()) {
            continue;
        }
        m.swap_rows(next, found);
        if (shadow != nullptr) {
            shadow->swap_rows(next, found);
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != next && m.get(r, c)) {
                m.xor_rows(r, next);
                if (shadow != nullptr) {
                    shadow->xor_rows(r, next);
                }
            }
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

}  // namespace

RowEchelon rref(BitMatrix m) {
    RowEchelon out;
    out.pivots = eliminate(m, nullptr);
    out.rank = out.pivots.size();
    m.truncate_rows(out.rank);
    out.matrix = std::move(m);
    return out;
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

std::optional<BitVector> in_row_space(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument("in_row_space: vector has " + std::to_string(v.size()) +
                                    " bits, matrix has " + std::to_string(m.cols()) + " columns");
    }
    return RowSpace(m, true).combination(v);
}

BitMatrix kernel_basis(const BitMatrix& m) {
    const RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) {
        is_pivot[p] = true;
    }
    BitMatrix basis(0, m.cols());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector v(m.cols());
        v.set(f);
        for (std::size_t r = 0; r < e.rank; ++r) {
            if (e.matrix.get(r, f)) {
                v.set(e.pivots[r]);
            }
        }
        basis.append_row(v);
    }
    return basis;
}

RowSpace::RowSpace(const BitMatrix& generators, bool track_combinations)
    : pivot_row_(generators.cols(), npos), tracked_(track_combinations) {
    BitMatrix work = generators;
    if (tracked_) {
        transform_ = BitMatrix::identity(generators.rows());
        echelon_.pivots = eliminate(work, &transform_);
        transform_.truncate_rows(echelon_.pivots.size());
    } else {
        echelon_.pivots = eliminate(work, nullptr);
    }
    echelon_.rank = echelon_.pivots.size();
    work.truncate_rows(echelon_.rank);
    echelon_.matrix = std::move(work);
    for (std::size_t r = 0; r < echelon_.rank; ++r) {
        pivot_row_[echelon_.pivots[r]] = r;
    }
}

std::optional<BitVector> RowSpace::combination(const BitVector& v) const {
    if (!tracked_) {
        throw std::logic_error("RowSpace was built without combination tracking");
    }
    if (v.size() != cols()) {
        throw std::invalid_argument("RowSpace: dimension mismatch");
    }
    BitVector candidate(cols());
    BitVector selection(transform_.cols());
    for (std::size_t r = 0; r < echelon_.rank; ++r) {
        if (v.get(echelon_.pivots[r])) {
            xor_words(candidate.words(), echelon_.matrix.row(r));
            xor_words(selection.words(), transform_.row(r));
        }
    }
    if (candidate != v) {
        return std::nullopt;
    }
    return selection;
}

BitVector RowSpace::project(const BitVector& v) const {
    if (v.size() != cols()) {
        throw std::invalid_argument("RowSpace: dimension mismatch");
    }
    BitVector out(cols());
    for (std::size_t r = 0; r < echelon_.rank; ++r) {
        if (v.get(echelon_.pivots[r])) {
            xor_words(out.words(), echelon_.matrix.row(r));
        }
    }
    return out;
}

bool RowSpace::contains(const BitVector& v) const { return project(v) == v; }

}  // namespace qmetro
