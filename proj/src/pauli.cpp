#include "qmetro/pauli.hpp"

#include <stdexcept>

namespace qmetro {

namespace {

void require_same_n(const PauliOperator& a, const PauliOperator& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("Pauli dimension mismatch: " + std::to_string(a.num_qubits()) + " vs " +
                                    std::to_string(b.num_qubits()) + " qubits");
    }
}

int popcount_and(const BitVector& a, const BitVector& b) {
    int total = 0;
    auto wa = a.words();
    auto wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) {
        total += std::popcount(wa[i] & wb[i]);
    }
    return total;
}

}  // namespace

PauliOperator::PauliOperator(BitVector x, BitVector z, Phase phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("Pauli x and z parts differ in length");
    }
}

PauliOperator PauliOperator::z_on(std::size_t n, std::span<const std::size_t> qubits) {
    return PauliOperator(BitVector(n), BitVector::from_indices(n, qubits));
}

PauliOperator PauliOperator::x_on(std::size_t n, std::span<const std::size_t> qubits) {
    return PauliOperator(BitVector::from_indices(n, qubits), BitVector(n));
}

PauliOperator PauliOperator::from_string(std::string_view s) {
    Phase phase = Phase::PlusOne;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        phase = s.front() == '-' ? Phase::MinusOne : Phase::PlusOne;
        s.remove_prefix(1);
    }
    PauliOperator p(s.size());
    p.phase_ = phase;
    for (std::size_t q = 0; q < s.size(); ++q) {
        switch (s[q]) {
            case 'I': break;
            case 'X': p.x_.set(q); break;
            case 'Z': p.z_.set(q); break;
            case 'Y':
                p.x_.set(q);
                p.z_.set(q);
                break;
            default:
                throw std::invalid_argument(std::string("invalid Pauli character '") + s[q] + "'");
        }
    }
    return p;
}

PauliOperator PauliOperator::negated() const {
    PauliOperator out = *this;
    out.phase_ = phase_ * Phase::MinusOne;
    return out;
}

char PauliOperator::letter(std::size_t q) const {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    return kLetters[(x_.get(q) ? 1 : 0) | (z_.get(q) ? 2 : 0)];
}

std::string PauliOperator::to_string() const {
    if (!is_hermitian()) {
        throw std::domain_error("cannot serialize a Pauli operator with an imaginary phase");
    }
    std::string s;
    s.reserve(num_qubits() + 1);
    s.push_back(phase_ == Phase::MinusOne ? '-' : '+');
    for (std::size_t q = 0; q < num_qubits(); ++q) {
        s.push_back(letter(q));
    }
    return s;
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
    require_same_n(a, b);
    // Internally a = i^(pa + |xa∧za|) X^xa Z^za. Moving Z^za past X^xb costs (-1)^(za·xb).
    BitVector x = a.x() ^ b.x();
    BitVector z = a.z() ^ b.z();
    const int ya = popcount_and(a.x(), a.z());
    const int yb = popcount_and(b.x(), b.z());
    const int yc = popcount_and(x, z);
    const int swap = popcount_and(a.z(), b.x());
    const int k = exponent(a.phase()) + exponent(b.phase()) + ya + yb + 2 * swap - yc;
    return PauliOperator(std::move(x), std::move(z), phase_from_exponent(k));
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
    require_same_n(a, b);
    return ((popcount_and(a.x(), b.z()) + popcount_and(a.z(), b.x())) & 1) == 0;
}

std::size_t weight(const PauliOperator& a) { return (a.x() | a.z()).popcount(); }

}  // namespace qmetro
