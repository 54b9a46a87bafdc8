#include <random>

#include "doctest.h"
#include "qmetro/bits.hpp"
#include "qmetro/classical_rm.hpp"
#include "qmetro/gf2.hpp"

using namespace qmetro;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, bit(rng));
    return m;
}

bool is_rref(const RowEchelon& e) {
    for (std::size_t r = 0; r < e.rank; ++r) {
        const std::size_t p = e.pivots[r];
        if (!e.matrix.get(r, p)) return false;
        if (r > 0 && e.pivots[r - 1] >= p) return false;
        for (std::size_t c = 0; c < p; ++c)
            if (e.matrix.get(r, c)) return false;
        for (std::size_t o = 0; o < e.rank; ++o)
            if (o != r && e.matrix.get(o, p)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("bit vector basics") {
    BitVector v = BitVector::from_string("0110010");
    CHECK(v.size() == 7);
    CHECK(v.popcount() == 3);
    CHECK(v.ones() == std::vector<std::size_t>{1, 2, 5});
    CHECK(v.to_string() == "0110010");
    v.flip(1);
    CHECK(v == BitVector::from_indices(7, {2, 5}));
    CHECK(v.dot(BitVector::from_indices(7, {2, 3})));
    CHECK_FALSE(v.dot(BitVector::from_indices(7, {2, 5})));
    CHECK_THROWS_AS(v ^= BitVector(8), std::invalid_argument);

    BitVector wide(130);
    wide.set(129);
    wide.set(64);
    CHECK(wide.popcount() == 2);
    CHECK(wide.words().size() == 3);
}

TEST_CASE("rref examples") {
    const auto id = BitMatrix::identity(3);
    const auto e = rref(id);
    CHECK(e.rank == 3);
    CHECK(e.matrix == id);

    const auto dup = rref(BitMatrix::from_strings({"11", "11"}));
    CHECK(dup.rank == 1);
    CHECK(dup.matrix.rows() == 1);
    CHECK(dup.matrix.row_vector(0) == BitVector::from_string("11"));

    CHECK(rank(rm_generator(1, 3).generator) == 4);
}

TEST_CASE("in_row_space examples") {
    const auto m = BitMatrix::from_strings({"10", "01"});
    auto zero = in_row_space(m, BitVector(2));
    REQUIRE(zero);
    CHECK(zero->none());
    auto both = in_row_space(m, BitVector::from_string("11"));
    REQUIRE(both);
    CHECK(*both == BitVector::from_string("11"));
    CHECK_THROWS_AS(in_row_space(m, BitVector(3)), std::invalid_argument);

    const auto g = rm_generator(1, 3).generator;
    BitVector v = g.row_vector(1) ^ g.row_vector(2);
    auto sel = in_row_space(g, v);
    REQUIRE(sel);
    CHECK(*sel == BitVector::from_indices(4, {1, 2}));
    CHECK_FALSE(in_row_space(g, BitVector::from_indices(8, {0})));
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(BitMatrix::identity(4)).rows() == 0);
    CHECK(kernel_basis(BitMatrix(3, 3)).rows() == 3);
    const auto k = kernel_basis(BitMatrix::from_strings({"110"}));
    CHECK(k.rows() == 2);
    const RowSpace span(k);
    CHECK(span.contains(BitVector::from_string("110")));
    CHECK(span.contains(BitVector::from_string("001")));
    CHECK_FALSE(span.contains(BitVector::from_string("100")));
}

TEST_CASE("row space without tracking refuses combinations") {
    const RowSpace s(BitMatrix::identity(2));
    CHECK_THROWS_AS(s.combination(BitVector(2)), std::logic_error);
}

TEST_CASE("random matrices: rref properties") {
    std::mt19937_64 rng(0x5eed01);
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    for (int trial = 0; trial < 1500; ++trial) {
        const auto m = random_matrix(rng, dim(rng), dim(rng), trial % 3 == 0 ? 0.2 : 0.5);
        const auto e = rref(m);
        CHECK(is_rref(e));
        CHECK(rref(e.matrix).matrix == e.matrix);
        CHECK(e.rank + kernel_basis(m).rows() == m.cols());
        // Same row space in both directions.
        const RowSpace orig(m);
        const RowSpace reduced(e.matrix);
        for (std::size_t r = 0; r < m.rows(); ++r) CHECK(reduced.contains(m.row_vector(r)));
        for (std::size_t r = 0; r < e.rank; ++r) CHECK(orig.contains(e.matrix.row_vector(r)));
        // Kernel vectors are annihilated.
        const auto k = kernel_basis(m);
        for (std::size_t r = 0; r < k.rows(); ++r) CHECK(m.multiply(k.row_vector(r)).none());
        CHECK(rank(k) == k.rows());
    }
}

TEST_CASE("random matrices: membership agrees with span enumeration") {
    std::mt19937_64 rng(0x5eed02);
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    for (int trial = 0; trial < 1200; ++trial) {
        const std::size_t rows = dim(rng), cols = dim(rng);
        const auto m = random_matrix(rng, rows, cols);
        std::vector<bool> in_span(std::size_t{1} << cols, false);
        for (std::size_t mask = 0; mask < (std::size_t{1} << rows); ++mask) {
            std::size_t v = 0;
            for (std::size_t r = 0; r < rows; ++r)
                if ((mask >> r) & 1)
                    for (std::size_t c = 0; c < cols; ++c)
                        if (m.get(r, c)) v ^= std::size_t{1} << c;
            in_span[v] = true;
        }
        std::uniform_int_distribution<std::size_t> pick(0, (std::size_t{1} << cols) - 1);
        for (int q = 0; q < 4; ++q) {
            const std::size_t bits = pick(rng);
            BitVector v(cols);
            for (std::size_t c = 0; c < cols; ++c) v.set(c, (bits >> c) & 1);
            const auto sel = in_row_space(m, v);
            CHECK(sel.has_value() == in_span[bits]);
            if (sel) CHECK(m.transpose().multiply(*sel) == v);
        }
    }
}

TEST_CASE("wide matrices cross word boundaries") {
    std::mt19937_64 rng(0x5eed03);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m = random_matrix(rng, 40, 150, 0.1);
        const auto e = rref(m);
        CHECK(is_rref(e));
        CHECK(e.rank + kernel_basis(m).rows() == 150);
        BitVector sel(40);
        sel.set(3);
        sel.set(39);
        const BitVector v = m.combine_rows(sel);
        const auto got = in_row_space(m, v);
        REQUIRE(got);
        CHECK(m.combine_rows(*got) == v);
    }
}
