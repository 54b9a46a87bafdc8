#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmetro/pauli.hpp"
#include "qmetro/stabilizer_code.hpp"

namespace qmetro {

using Amplitude = std::complex<double>;
/// Dense state; qubit j is bit j of the basis index.
using StateVector = std::vector<Amplitude>;

inline constexpr std::size_t kMaxOracleQubits = 15;
inline constexpr double kCheckTolerance = 1e-9;
inline constexpr double kGapTolerance = 1e-8;

class CodespaceDimensionMismatch : public std::runtime_error {
public:
    explicit CodespaceDimensionMismatch(std::size_t found)
        : std::runtime_error("code space has " + std::string(found > 2 ? "more than 2" : std::to_string(found)) +
                             " independent states, expected 2"),
          found_(found) {}
    /// Independent states found before the scan stopped (capped at 3).
    std::size_t found() const { return found_; }

private:
    std::size_t found_;
};

struct CodespaceBasis {
    std::size_t n = 0;
    StateVector zero;
    StateVector one;
};

/// Projects computational basis states onto the joint +1 eigenspace and
/// orthonormalizes the first two independent results.
CodespaceBasis codespace(const StabilizerCode& code);

StateVector apply_pauli(const PauliOperator& p, const StateVector& psi);
Amplitude inner(const StateVector& a, const StateVector& b);

/// M_ab = <a_L| Σ Z_{i1}..Z_{ik} |b_L>.
struct GeffMatrix {
    std::array<std::array<Amplitude, 2>, 2> m{};
    double gap = 0.0;
    double hermiticity_residual = 0.0;
    /// Singular values of M minus its trace part, descending.
    std::array<double, 2> traceless_singular_values{};
};

/// Throws std::runtime_error when M is not Hermitian to 1e-9.
GeffMatrix g_eff_matrix(const CodespaceBasis& basis, std::size_t k = 3);
double g_eff_gap(const CodespaceBasis& basis, std::size_t k = 3);
double g_eff_gap(const StabilizerCode& code, std::size_t k = 3);

/// Σ over k-subsets of Π s_i for per-qubit signs s_i = ±1 given by `bits`.
long long elementary_symmetric_signs(unsigned long long bits, std::size_t n, std::size_t k);

struct KlOptions {
    std::size_t max_weight = 2;
    /// Letters drawn on each qubit of the error support.
    std::string letters = "XYZ";
};

struct KlReport {
    bool passed = true;
    double worst_residual = 0.0;
    std::size_t operators_checked = 0;
    /// Error attaining worst_residual.
    std::string worst_operator;
};

KlReport knill_laflamme_check(const StabilizerCode& code, const CodespaceBasis& basis, const KlOptions& options = {});
KlReport knill_laflamme_check(const StabilizerCode& code, const KlOptions& options = {});

}  // namespace qmetro
