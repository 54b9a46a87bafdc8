#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "qmetro/bits.hpp"

namespace qmetro {

/// Global phase i^k, k = 0..3.
enum class Phase : std::uint8_t { PlusOne = 0, PlusI = 1, MinusOne = 2, MinusI = 3 };

constexpr Phase phase_from_exponent(int k) { return static_cast<Phase>(((k % 4) + 4) % 4); }
constexpr int exponent(Phase p) { return static_cast<int>(p); }
constexpr Phase operator*(Phase a, Phase b) { return phase_from_exponent(exponent(a) + exponent(b)); }

/// Signed n-qubit Pauli operator in binary symplectic form.
///
/// The operator is phase · P_1 ⊗ ... ⊗ P_n where P_j is I, X, Z or Y according to
/// (x_j, z_j) = (0,0), (1,0), (0,1), (1,1), with Y the Hermitian Pauli Y = iXZ.
/// Hence phase ∈ {+1, -1} exactly when the operator is Hermitian, and the
/// string form "-XYZ" carries the stored phase verbatim.
class PauliOperator {
public:
    PauliOperator() = default;
    explicit PauliOperator(std::size_t n) : x_(n), z_(n) {}
    PauliOperator(BitVector x, BitVector z, Phase phase = Phase::PlusOne);

    static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
    static PauliOperator z_on(std::size_t n, std::span<const std::size_t> qubits);
    static PauliOperator x_on(std::size_t n, std::span<const std::size_t> qubits);
    /// Optional leading '+'/'-', then one of I,X,Y,Z per qubit.
    static PauliOperator from_string(std::string_view s);

    std::size_t num_qubits() const { return x_.size(); }
    const BitVector& x() const { return x_; }
    const BitVector& z() const { return z_; }
    Phase phase() const { return phase_; }
    void set_phase(Phase p) { phase_ = p; }

    bool is_hermitian() const { return phase_ == Phase::PlusOne || phase_ == Phase::MinusOne; }
    bool is_identity_up_to_phase() const { return x_.none() && z_.none(); }
    bool is_z_type() const { return x_.none(); }
    /// +1 or -1; only meaningful for Hermitian operators.
    int sign() const { return phase_ == Phase::MinusOne ? -1 : 1; }
    PauliOperator negated() const;

    /// Single-qubit letter at position q.
    char letter(std::size_t q) const;

    /// Throws std::domain_error for non-Hermitian operators (no i-phases are serialized).
    std::string to_string() const;

    friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

private:
    BitVector x_;
    BitVector z_;
    Phase phase_ = Phase::PlusOne;
};

/// Exact product a·b. Throws std::invalid_argument on qubit-count mismatch.
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
inline PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) { return multiply(a, b); }

/// Symplectic product test. Throws std::invalid_argument on qubit-count mismatch.
bool commutes(const PauliOperator& a, const PauliOperator& b);

/// Number of qubits acted on non-trivially.
std::size_t weight(const PauliOperator& a);

}  // namespace qmetro
