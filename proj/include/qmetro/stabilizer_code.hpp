#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmetro/bits.hpp"
#include "qmetro/gf2.hpp"
#include "qmetro/pauli.hpp"

namespace qmetro {

class CodeValidationError : public std::runtime_error {
public:
    enum class Kind {
        Empty,
        DimensionMismatch,
        NonHermitian,
        NonCommuting,
        DependentGenerators,
        MinusIdentityInGroup,
    };

    CodeValidationError(Kind kind, const std::string& what, std::size_t first = 0, std::size_t second = 0)
        : std::runtime_error(what), kind_(kind), first_(first), second_(second) {}

    Kind kind() const { return kind_; }
    /// Generator indices involved (NonCommuting pair, offending generator).
    std::size_t first() const { return first_; }
    std::size_t second() const { return second_; }

private:
    Kind kind_;
    std::size_t first_;
    std::size_t second_;
};

/// Z-type elements of the stabilizer group: z-parts plus the sign each element
/// carries in the group. Rows are in reduced echelon form.
struct ZSubgroup {
    BitMatrix basis;           // n columns
    std::vector<int> signs;    // ±1 per basis row
    /// Same rows with the sign stored in an extra column n (1 = negative), for
    /// sign-aware membership tests.
    RowSpace signed_space;
};

/// A validated stabilizer group on n qubits: commuting, independent generators
/// that do not generate -I. Immutable; copies share derived data.
class StabilizerCode {
public:
    /// Throws CodeValidationError when any group invariant fails.
    static StabilizerCode validate(std::vector<PauliOperator> generators, std::string name = "code");

    const std::string& name() const { return name_; }
    std::size_t num_qubits() const { return n_; }
    const std::vector<PauliOperator>& generators() const { return generators_; }
    /// n - rank.
    std::size_t num_logical() const { return n_ - generators_.size(); }

    /// Rows (x | z), one per generator.
    const BitMatrix& check_matrix() const { return derived_->check; }
    /// Row space of the check matrix with combination tracking.
    const RowSpace& symplectic_space() const { return derived_->space; }
    const ZSubgroup& z_subgroup() const { return derived_->zsub; }
    /// Deterministic logical representative used as the sign reference when
    /// classifying logical operators; Z-type whenever a Z-type logical exists.
    const std::optional<PauliOperator>& reference_logical() const { return derived_->reference; }

    /// Qubits i for which +Z_i or -Z_i is in the group.
    std::vector<std::size_t> single_z_stabilizers() const;
    std::size_t max_generator_weight() const;

    /// Exact group element reproducing the symplectic vector of p (ignoring
    /// phase), or nullopt when p's vector is not in the row space.
    std::optional<PauliOperator> group_element_matching(const PauliOperator& p) const;

    StabilizerCode with_name(std::string name) const;

private:
    struct Derived {
        BitMatrix check;
        RowSpace space;
        ZSubgroup zsub;
        std::optional<PauliOperator> reference;
    };

    StabilizerCode() = default;

    std::string name_;
    std::size_t n_ = 0;
    std::vector<PauliOperator> generators_;
    std::shared_ptr<const Derived> derived_;
};

/// Product of the generators selected by `selection`, in index order.
PauliOperator product_of(const std::vector<PauliOperator>& generators, const BitVector& selection);

struct LogicalClass {
    enum class Tag { Stabilizer, NegativeStabilizer, AntiCommutes, Logical };
    Tag tag = Tag::AntiCommutes;
    /// For Logical: +1/-1 when p = ±reference on the code space; nullopt when
    /// p represents a different logical operator than the reference.
    std::optional<int> action_sign;

    friend bool operator==(const LogicalClass&, const LogicalClass&) = default;
};

const char* to_string(LogicalClass::Tag tag);

/// Classifies a Hermitian Pauli against the code.
LogicalClass classify(const StabilizerCode& code, const PauliOperator& p);

/// Regenerates the group so that every Z-type element carries a + sign.
/// Returns the input unchanged when it already has that property.
StabilizerCode normalize_signs(const StabilizerCode& code);

/// True when every Z-type element of the group has sign +.
bool has_positive_z_subgroup(const StabilizerCode& code);

/// Z-parts of a basis of the Z-type stabilizer subgroup.
BitMatrix z_subgroup_basis(const StabilizerCode& code);

struct DistanceReport {
    bool passed = true;
    std::size_t operators_checked = 0;
    std::vector<PauliOperator> violations;  // logical operators of weight <= 2, in scan order
};

/// Exhaustive weight-1 and weight-2 scan; requires k = 1 (std::invalid_argument otherwise).
DistanceReport verify_distance_3(const StabilizerCode& code);

// Code file format:
//   n=<int> name=<string>
//   +ZZIIIIIII
//   ...
class CodeFileError : public std::runtime_error {
public:
    CodeFileError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

void write_code(std::ostream& out, const StabilizerCode& code);
/// Throws CodeFileError for malformed text, CodeValidationError for invalid groups.
StabilizerCode read_code(std::istream& in);

}  // namespace qmetro
