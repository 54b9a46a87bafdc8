#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmetro/classical_rm.hpp"
#include "qmetro/constructors.hpp"
#include "qmetro/rational.hpp"
#include "qmetro/stabilizer_code.hpp"

namespace qmetro {

/// Tally of all C(n, k) Z-strings Z_{i1}...Z_{ik} by class.
struct LogicalCensus {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t ell = 0;  // Logical class
    std::uint64_t stabilizer = 0;
    std::uint64_t negative_stabilizer = 0;
    std::uint64_t anticommuting = 0;
    /// Per qubit: number of logical Z-strings touching it.
    std::vector<std::uint64_t> degrees;
    /// First logical supports in lexicographic order, up to the sample limit.
    std::vector<std::vector<std::size_t>> samples;
    /// Logical strings acting as +reference / -reference on the code space.
    std::uint64_t positive_logicals = 0;
    std::uint64_t negative_logicals = 0;

    std::uint64_t total() const { return ell + stabilizer + negative_stabilizer + anticommuting; }
    /// True when every logical string carries the same action sign.
    bool signs_consistent() const { return positive_logicals == 0 || negative_logicals == 0; }

    friend bool operator==(const LogicalCensus&, const LogicalCensus&) = default;
};

struct CensusOptions {
    std::size_t sample_limit = 16;
};

/// Word-level census; OpenMP-parallel over the first subset index.
LogicalCensus census(const StabilizerCode& code, std::size_t k = 3, const CensusOptions& options = {});
/// Same kernel on one thread.
LogicalCensus census_serial(const StabilizerCode& code, std::size_t k = 3, const CensusOptions& options = {});
/// Independent slow path: every Z-string goes through classify().
LogicalCensus census_reference(const StabilizerCode& code, std::size_t k = 3, const CensusOptions& options = {});

/// Optimum of 2 min_β max_j |μ_j(β)| for the ZZZ generator.
struct OptimalBound {
    std::size_t n = 0;
    Rational value;      // optimal ΔG_eff
    Rational beta_star;  // smallest minimizing β̄
    Rational lower;      // 2 (n+1)(n-1)(n-3)/24
    Rational upper;      // 2 (n+7) n (n-1)/24
};

/// Closed-form coefficient a family's logical count predicts, checked against 4ℓ².
struct ClosedFormCheck {
    Family family = Family::Shor;
    std::string formula;
    Rational expected;
    bool matches = false;
    std::vector<std::string> flags;
};

struct QfiReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t ell = 0;
    BigInt delta_g_eff;       // 2ℓ
    BigInt qfi_coeff;         // 4ℓ², so F = 4ℓ² t²
    BigInt noiseless_delta_g; // spread of the Z-string sum over all basis states
    BigInt noiseless_coeff;   // noiseless_delta_g²
    BigInt ghz_coeff;         // (G(0...0) - G(1...1))²
    std::optional<OptimalBound> optimal;  // k = 3 only
    std::optional<ClosedFormCheck> closed_form;
};

/// Builds the report from a census; `family` enables the closed-form check.
QfiReport qfi_report(const StabilizerCode& code, const LogicalCensus& census, std::optional<Family> family = {});
QfiReport qfi_report(const StabilizerCode& code, std::size_t k = 3, std::optional<Family> family = {});

/// Family implied by a constructor-generated code name, if recognizable.
std::optional<Family> infer_family(const std::string& code_name);

/// Eigenvalue of Σ Z_iZ_jZ_k - β̄ Σ Z_i on basis states with j ones.
struct MuSpectrum {
    std::size_t n = 0;
    Rational beta;
    std::vector<Rational> values;  // μ_0..μ_n
};

MuSpectrum mu_spectrum(std::size_t n, const Rational& beta);

/// Exact minimization over all pairwise crossings and zeros of the μ_j lines.
OptimalBound optimal_delta_g(std::size_t n);

/// Least-squares slope of log ℓ against log n.
double scaling_fit(const std::vector<std::pair<double, double>>& samples);

/// Sum over k-subsets of Π Z on a basis state with `ones` qubits set: the
/// coefficient of x^k in (1 + x)^(n - ones) (1 - x)^ones.
BigInt z_string_sum(std::size_t n, std::size_t k, std::size_t ones);

}  // namespace qmetro
