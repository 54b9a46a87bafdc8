#include "qmetro/constructors.hpp"

#include <vector>

#include "qmetro/classical_rm.hpp"

namespace qmetro {

namespace {

std::string suffix(std::string_view key, std::size_t value) { return std::string(key) + std::to_string(value); }

}  // namespace

StabilizerCode thin_surface(std::size_t lx) {
    if (lx < 2) {
        throw std::invalid_argument("thin_surface: L_x must be at least 2, got " + std::to_string(lx));
    }
    const std::size_t n = 5 * lx - 2;
    // Index of horizontal qubit (row 0/2/4, column c) and vertical qubit (row 1/3, slot c).
    auto h = [lx](std::size_t row, std::size_t c) { return (row / 2) * (2 * lx - 1) + c; };
    auto v = [lx](std::size_t row, std::size_t c) { return (row / 2) * (2 * lx - 1) + lx + c; };

    std::vector<PauliOperator> gens;
    for (std::size_t row : {1, 3}) {
        for (std::size_t c = 0; c < lx; ++c) {
            std::vector<std::size_t> support = {h(row - 1, c), h(row + 1, c)};
            if (c > 0) {
                support.push_back(v(row, c - 1));
            }
            if (c + 1 < lx) {
                support.push_back(v(row, c));
            }
            gens.push_back(PauliOperator::x_on(n, support));
        }
    }
    for (std::size_t row : {0, 2, 4}) {
        for (std::size_t c = 0; c + 1 < lx; ++c) {
            std::vector<std::size_t> support = {h(row, c), h(row, c + 1)};
            if (row > 0) {
                support.push_back(v(row - 1, c));
            }
            if (row < 4) {
                support.push_back(v(row + 1, c));
            }
            gens.push_back(PauliOperator::z_on(n, support));
        }
    }
    return StabilizerCode::validate(std::move(gens), suffix("thin_surface_lx", lx));
}

StabilizerCode qrm1(std::size_t m) {
    if (m < 3 || m > 12) {
        throw std::invalid_argument("qrm1: m must be in [3, 12], got " + std::to_string(m));
    }
    const ClassicalCode x_code = shorten(rm_generator(1, m));
    const ClassicalCode z_code = shorten(rm_generator(m - 2, m));
    const std::size_t n = x_code.length;
    std::vector<PauliOperator> gens;
    for (std::size_t r = 0; r < x_code.generator.rows(); ++r) {
        gens.emplace_back(x_code.generator.row_vector(r), BitVector(n));
    }
    for (std::size_t r = 0; r < z_code.generator.rows(); ++r) {
        gens.emplace_back(BitVector(n), z_code.generator.row_vector(r));
    }
    return StabilizerCode::validate(std::move(gens), suffix("qrm1_m", m));
}

StabilizerCode generalized_shor(std::size_t k, std::size_t nr) {
    if (k < 3 || nr < 3) {
        throw std::invalid_argument("generalized_shor: need k >= 3 and n_r >= 3, got k=" + std::to_string(k) +
                                    " n_r=" + std::to_string(nr));
    }
    const std::size_t n = k * nr;
    std::vector<PauliOperator> gens;
    for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t i = 0; i + 1 < nr; ++i) {
            const std::size_t q = b * nr + i;
            const std::size_t pair[2] = {q, q + 1};
            gens.push_back(PauliOperator::z_on(n, pair));
        }
    }
    for (std::size_t b = 0; b + 1 < k; ++b) {
        std::vector<std::size_t> support;
        for (std::size_t q = b * nr; q < (b + 2) * nr; ++q) {
            support.push_back(q);
        }
        gens.push_back(PauliOperator::x_on(n, support));
    }
    std::string name = k == 3 ? suffix("shor_nr", nr) : suffix("generalized_shor_k", k) + suffix("_nr", nr);
    return StabilizerCode::validate(std::move(gens), std::move(name));
}

StabilizerCode shor(std::size_t nr) {
    if (nr < 3) {
        throw std::invalid_argument("shor: n_r must be at least 3, got " + std::to_string(nr));
    }
    return generalized_shor(3, nr);
}

StabilizerCode concatenate_with_repetition(const StabilizerCode& inner, std::size_t nr) {
    if (inner.num_logical() != 1) {
        throw std::invalid_argument("concatenate_with_repetition: inner code must encode one qubit, got k=" +
                                    std::to_string(inner.num_logical()));
    }
    if (nr < 1) {
        throw std::invalid_argument("concatenate_with_repetition: n_r must be positive");
    }
    const std::size_t q = inner.num_qubits();
    const std::size_t n = q * nr;
    std::vector<PauliOperator> gens;
    for (std::size_t b = 0; b < q; ++b) {
        for (std::size_t i = 0; i + 1 < nr; ++i) {
            const std::size_t pair[2] = {b * nr + i, b * nr + i + 1};
            gens.push_back(PauliOperator::z_on(n, pair));
        }
    }
    // The Y count of a lifted generator equals the inner one (Y only on block
    // heads), so the stored phase carries over unchanged.
    for (const auto& g : inner.generators()) {
        BitVector x(n);
        BitVector z(n);
        for (std::size_t j = 0; j < q; ++j) {
            if (g.x().get(j)) {
                for (std::size_t i = 0; i < nr; ++i) {
                    x.set(j * nr + i);
                }
            }
            if (g.z().get(j)) {
                z.set(j * nr);
            }
        }
        gens.emplace_back(std::move(x), std::move(z), g.phase());
    }
    return StabilizerCode::validate(std::move(gens), inner.name() + "_rep" + std::to_string(nr));
}

StabilizerCode phase_flip_code() {
    return StabilizerCode::validate({PauliOperator::from_string("+XXI"), PauliOperator::from_string("+IXX")},
                                    "phase_flip");
}

StabilizerCode repetition_code(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("repetition_code: need at least 2 qubits");
    }
    std::vector<PauliOperator> gens;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t pair[2] = {i, i + 1};
        gens.push_back(PauliOperator::z_on(n, pair));
    }
    return StabilizerCode::validate(std::move(gens), suffix("repetition_n", n));
}

StabilizerCode construct(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::ThinSurface: return thin_surface(spec.lx);
        case Family::QRM1: return qrm1(spec.m);
        case Family::Shor: return shor(spec.nr);
        case Family::GeneralizedShor: return generalized_shor(spec.k, spec.nr);
        case Family::Concatenated:
            return concatenate_with_repetition(spec.inner ? *spec.inner : phase_flip_code(), spec.nr);
    }
    throw std::invalid_argument("unknown family");
}

Family parse_family(std::string_view name) {
    if (name == "thin-surface" || name == "thin_surface") return Family::ThinSurface;
    if (name == "qrm1" || name == "qrm") return Family::QRM1;
    if (name == "shor") return Family::Shor;
    if (name == "generalized-shor" || name == "generalized_shor") return Family::GeneralizedShor;
    if (name == "concatenated") return Family::Concatenated;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::ThinSurface: return "thin-surface";
        case Family::QRM1: return "qrm1";
        case Family::Shor: return "shor";
        case Family::GeneralizedShor: return "generalized-shor";
        case Family::Concatenated: return "concatenated";
    }
    return "unknown";
}

}  // namespace qmetro
