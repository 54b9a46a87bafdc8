#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "qmetro/stabilizer_code.hpp"

namespace qmetro {

/// Planar surface code with three qubit rows of length L_x and two rows of
/// L_x - 1 vertical qubits between them; n = 5 L_x - 2.
///
/// Qubit layout (row-major, left to right), shown for L_x = 3:
///
///     row 0:  0   1   2          horizontal qubits, columns 0..L_x-1
///     row 1:    3   4            vertical qubits, between columns c and c+1
///     row 2:  5   6   7
///     row 3:    8   9
///     row 4: 10  11  12
///
/// X plaquettes sit on the vertical links of each column (weight 3 on the left
/// and right rough edges, 4 otherwise); Z plaquettes sit between columns
/// (weight 3 on the top and bottom smooth edges, 4 in the middle row). The
/// X generators come first, then the Z generators.
StabilizerCode thin_surface(std::size_t lx);

/// CSS code on 2^m - 1 qubits: X generators from the shortened first-order
/// Reed-Muller generator, Z generators from the shortened order-(m-2) one.
StabilizerCode qrm1(std::size_t m);

/// Shor code on 3 n_r qubits (blocks of n_r).
StabilizerCode shor(std::size_t nr);

/// k blocks of n_r qubits: Z_iZ_{i+1} chains inside each block, then k-1
/// X-type generators covering adjacent block pairs.
StabilizerCode generalized_shor(std::size_t k, std::size_t nr);

/// Encodes each qubit of `inner` with an n_r-qubit repetition code: qubit j of
/// the inner code becomes block j (qubits j n_r .. (j+1) n_r - 1); Z maps to Z
/// on the block's first qubit and X to X on the whole block.
StabilizerCode concatenate_with_repetition(const StabilizerCode& inner, std::size_t nr);

/// {XXI, IXX}.
StabilizerCode phase_flip_code();
/// Bit-flip repetition code {Z_iZ_{i+1}} on n qubits.
StabilizerCode repetition_code(std::size_t n);

enum class Family { ThinSurface, QRM1, Shor, GeneralizedShor, Concatenated };

struct FamilySpec {
    Family family = Family::Shor;
    std::size_t lx = 0;  // ThinSurface
    std::size_t m = 0;   // QRM1
    std::size_t nr = 0;  // Shor, GeneralizedShor, Concatenated
    std::size_t k = 0;   // GeneralizedShor
    /// Concatenated: inner code (defaults to the phase-flip code).
    std::shared_ptr<const StabilizerCode> inner;
};

StabilizerCode construct(const FamilySpec& spec);

/// "thin-surface", "qrm1", "shor", "generalized-shor", "concatenated".
Family parse_family(std::string_view name);
std::string family_name(Family f);

}  // namespace qmetro
