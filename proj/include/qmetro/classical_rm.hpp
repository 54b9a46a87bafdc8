#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qmetro/bits.hpp"

namespace qmetro {

using BigInt = boost::multiprecision::cpp_int;

/// Binary linear code given by a generator matrix (rows may be dependent).
struct ClassicalCode {
    BitMatrix generator;
    std::size_t length = 0;
    std::size_t dimension = 0;  // rank of `generator`

    static ClassicalCode from_generator(BitMatrix generator);
};

/// A_0..A_n: number of codewords of each Hamming weight.
struct WeightEnumerator {
    std::vector<BigInt> coefficients;

    std::size_t length() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
    BigInt total() const;
    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

class DimensionTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxEnumerationDimension = 26;

/// Rows v0 (all ones), v1..vm, then the Boolean products of 2..r of v1..vm,
/// ordered by product size and lexicographically by index set within a size.
/// Bit p of v_i (i >= 1) is bit (i-1) of p.
ClassicalCode rm_generator(std::size_t r, std::size_t m);

/// Deletes the first row and first column. The first row must be all ones.
ClassicalCode shorten(const ClassicalCode& code);

/// Generator matrix of the dual code (kernel of the generator).
ClassicalCode dual(const ClassicalCode& code);

/// Exact enumeration over all 2^dimension codewords; parallel Gray-code walk.
/// Throws DimensionTooLarge above kMaxEnumerationDimension.
WeightEnumerator weight_enumerator(const ClassicalCode& code);

/// Serial reference: every codeword built from scratch from its coefficient bits.
WeightEnumerator weight_enumerator_reference(const ClassicalCode& code);

/// Dual enumerator via W(C^⊥; x, y) = W(C; y - x, x + y) / |C|.
/// Throws std::invalid_argument when code_size != Σ A_i and std::domain_error
/// when a coefficient is not an integer.
WeightEnumerator macwilliams(const WeightEnumerator& w, const BigInt& code_size);

BigInt binomial(std::size_t n, std::size_t k);

/// Σ_s (-1)^s C(i, s) C(n - i, j - s): the coefficient of x^j y^(n-j) in (y - x)^i (x + y)^(n - i).
BigInt krawtchouk(std::size_t n, std::size_t j, std::size_t i);

}  // namespace qmetro
