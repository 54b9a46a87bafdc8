#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qmetro/classical_rm.hpp"
#include "qmetro/metrology.hpp"
#include "qmetro/rational.hpp"
#include "qmetro/stabilizer_code.hpp"

namespace qmetro {

/// ℓ ≤ 2w(w+1)n/3 for a generating set of maximum weight w.
struct LdpcCheck {
    bool passed = false;
    std::size_t w = 0;
    std::uint64_t ell = 0;
    Rational bound;
    Rational margin;  // bound - ℓ
};

LdpcCheck ldpc_bound_check(const StabilizerCode& code, const LogicalCensus& census);

/// First pair (i, j), i < j, with ±Z_iZ_j in the group; scan is lexicographic.
std::optional<std::pair<std::size_t, std::size_t>> has_z2_stabilizer(const StabilizerCode& code);

/// ℓ ≤ n(n-1)/6 when no ZZ stabilizer exists; vacuous pass otherwise.
struct ZzCheck {
    bool passed = false;
    bool vacuous = false;
    bool equality = false;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    std::uint64_t ell = 0;
    Rational bound;
};

ZzCheck zz_bound_check(const StabilizerCode& code, const LogicalCensus& census);

/// Connected components of the ZZ-stabilizer graph on qubits without a
/// single-Z stabilizer. Largest first, ties by smallest qubit; each component
/// is sorted.
std::vector<std::vector<std::size_t>> find_repetition_chains(const StabilizerCode& code);

/// ℓ_k ≤ C(n, k - k0), applicable when no Z-type stabilizer has weight ≤ 2 k0.
struct IntersectionCheck {
    enum class Status { Pass, Fail, NotApplicable };
    Status status = Status::NotApplicable;
    std::uint64_t ell = 0;
    BigInt bound;
    /// Support of a low-weight Z-type stabilizer blocking the precondition.
    std::vector<std::size_t> blocking;
};

const char* to_string(IntersectionCheck::Status status);

IntersectionCheck intersection_bound_check(const StabilizerCode& code, const LogicalCensus& census, std::size_t k0);

/// Lowest-weight Z-type stabilizer support of weight ≤ max_weight, first in
/// (weight, lexicographic) order.
std::optional<std::vector<std::size_t>> low_weight_z_stabilizer(const StabilizerCode& code, std::size_t max_weight);

struct NoGoReport {
    std::size_t n = 0;
    std::size_t w = 0;
    std::uint64_t ell = 0;
    LdpcCheck ldpc;
    ZzCheck zz;
    std::vector<std::vector<std::size_t>> chains;
    std::size_t chain_max = 0;
    double chain_fraction = 0.0;  // chain_max / n
};

/// Every check evaluated from the one census; requires k = 3.
NoGoReport no_go_report(const StabilizerCode& code, const LogicalCensus& census);

}  // namespace qmetro
