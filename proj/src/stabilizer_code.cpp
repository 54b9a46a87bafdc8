#include "qmetro/stabilizer_code.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>

namespace qmetro {

namespace {

BitMatrix x_part_matrix(const std::vector<PauliOperator>& gens, std::size_t n) {
    BitMatrix m(0, n);
    for (const auto& g : gens) {
        m.append_row(g.x());
    }
    return m;
}

BitVector symplectic_vector(const PauliOperator& p) {
    const std::size_t n = p.num_qubits();
    BitVector v(2 * n);
    for (std::size_t q : p.x().ones()) {
        v.set(q);
    }
    for (std::size_t q : p.z().ones()) {
        v.set(n + q);
    }
    return v;
}

// Combinations of generators whose product has no X part.
BitMatrix z_type_combinations(const std::vector<PauliOperator>& gens, std::size_t n) {
    return kernel_basis(x_part_matrix(gens, n).transpose());
}

ZSubgroup build_z_subgroup(const std::vector<PauliOperator>& gens, std::size_t n) {
    const BitMatrix combos = z_type_combinations(gens, n);
    BitMatrix signed_rows(0, n + 1);
    for (std::size_t r = 0; r < combos.rows(); ++r) {
        const PauliOperator element = product_of(gens, combos.row_vector(r));
        BitVector row(n + 1);
        for (std::size_t q : element.z().ones()) {
            row.set(q);
        }
        row.set(n, element.phase() == Phase::MinusOne);
        signed_rows.append_row(row);
    }
    ZSubgroup out;
    out.signed_space = RowSpace(signed_rows);
    const auto& e = out.signed_space.echelon();
    out.basis = BitMatrix(e.rank, n);
    for (std::size_t r = 0; r < e.rank; ++r) {
        for (std::size_t q = 0; q < n; ++q) {
            if (e.matrix.get(r, q)) {
                out.basis.set(r, q);
            }
        }
        out.signs.push_back(e.matrix.get(r, n) ? -1 : 1);
    }
    return out;
}

std::optional<PauliOperator> find_reference(const std::vector<PauliOperator>& gens, std::size_t n,
                                            const ZSubgroup& zsub, const RowSpace& space) {
    if (gens.size() >= n) {
        return std::nullopt;
    }
    const RowSpace z_space(zsub.basis);
    const BitMatrix z_commuting = kernel_basis(x_part_matrix(gens, n));
    for (std::size_t r = 0; r < z_commuting.rows(); ++r) {
        BitVector z = z_commuting.row_vector(r);
        if (!z_space.contains(z)) {
            return PauliOperator(BitVector(n), std::move(z));
        }
    }
    // No Z-type logical; fall back to the symplectic complement.
    BitMatrix swapped(0, 2 * n);
    for (const auto& g : gens) {
        BitVector row(2 * n);
        for (std::size_t q : g.z().ones()) {
            row.set(q);
        }
        for (std::size_t q : g.x().ones()) {
            row.set(n + q);
        }
        swapped.append_row(row);
    }
    const BitMatrix normalizer = kernel_basis(swapped);
    for (std::size_t r = 0; r < normalizer.rows(); ++r) {
        const BitVector v = normalizer.row_vector(r);
        if (space.contains(v)) {
            continue;
        }
        BitVector x(n);
        BitVector z(n);
        for (std::size_t q = 0; q < n; ++q) {
            x.set(q, v.get(q));
            z.set(q, v.get(n + q));
        }
        return PauliOperator(std::move(x), std::move(z));
    }
    return std::nullopt;
}

}  // namespace

PauliOperator product_of(const std::vector<PauliOperator>& generators, const BitVector& selection) {
    if (generators.empty()) {
        throw std::invalid_argument("product_of: no generators");
    }
    PauliOperator out = PauliOperator::identity(generators.front().num_qubits());
    for (std::size_t i : selection.ones()) {
        out = multiply(out, generators.at(i));
    }
    return out;
}

StabilizerCode StabilizerCode::validate(std::vector<PauliOperator> generators, std::string name) {
    using Kind = CodeValidationError::Kind;
    if (generators.empty()) {
        throw CodeValidationError(Kind::Empty, "stabilizer code needs at least one generator");
    }
    const std::size_t n = generators.front().num_qubits();
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].num_qubits() != n) {
            throw CodeValidationError(Kind::DimensionMismatch,
                                      "generator " + std::to_string(i) + " acts on " +
                                          std::to_string(generators[i].num_qubits()) + " qubits, expected " +
                                          std::to_string(n),
                                      i);
        }
        if (!generators[i].is_hermitian()) {
            throw CodeValidationError(Kind::NonHermitian, "generator " + std::to_string(i) + " is not Hermitian", i);
        }
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            if (!commutes(generators[i], generators[j])) {
                throw CodeValidationError(Kind::NonCommuting,
                                          "generators " + std::to_string(i) + " and " + std::to_string(j) +
                                              " anticommute",
                                          i, j);
            }
        }
    }

    auto derived = std::make_shared<Derived>();
    derived->check = BitMatrix(0, 2 * n);
    for (const auto& g : generators) {
        derived->check.append_row(symplectic_vector(g));
    }
    derived->space = RowSpace(derived->check, true);
    if (derived->space.rank() < generators.size()) {
        const BitMatrix relations = kernel_basis(derived->check.transpose());
        for (std::size_t r = 0; r < relations.rows(); ++r) {
            const PauliOperator product = product_of(generators, relations.row_vector(r));
            if (product.phase() != Phase::PlusOne) {
                throw CodeValidationError(Kind::MinusIdentityInGroup,
                                          "generators multiply to a nontrivial multiple of the identity");
            }
        }
        throw CodeValidationError(Kind::DependentGenerators, "generators are not independent");
    }
    derived->zsub = build_z_subgroup(generators, n);
    derived->reference = find_reference(generators, n, derived->zsub, derived->space);

    StabilizerCode code;
    code.name_ = std::move(name);
    code.n_ = n;
    code.generators_ = std::move(generators);
    code.derived_ = std::move(derived);
    return code;
}

StabilizerCode StabilizerCode::with_name(std::string name) const {
    StabilizerCode copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

std::vector<std::size_t> StabilizerCode::single_z_stabilizers() const {
    const RowSpace z_space(z_subgroup().basis);
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < n_; ++q) {
        if (z_space.contains(BitVector::from_indices(n_, {q}))) {
            out.push_back(q);
        }
    }
    return out;
}

std::size_t StabilizerCode::max_generator_weight() const {
    std::size_t w = 0;
    for (const auto& g : generators_) {
        w = std::max(w, weight(g));
    }
    return w;
}

std::optional<PauliOperator> StabilizerCode::group_element_matching(const PauliOperator& p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("operator acts on " + std::to_string(p.num_qubits()) + " qubits, code has " +
                                    std::to_string(n_));
    }
    auto selection = symplectic_space().combination(symplectic_vector(p));
    if (!selection) {
        return std::nullopt;
    }
    return product_of(generators_, *selection);
}

const char* to_string(LogicalClass::Tag tag) {
    switch (tag) {
        case LogicalClass::Tag::Stabilizer: return "Stabilizer";
        case LogicalClass::Tag::NegativeStabilizer: return "NegativeStabilizer";
        case LogicalClass::Tag::AntiCommutes: return "AntiCommutes";
        case LogicalClass::Tag::Logical: return "Logical";
    }
    return "?";
}

LogicalClass classify(const StabilizerCode& code, const PauliOperator& p) {
    if (p.num_qubits() != code.num_qubits()) {
        throw std::invalid_argument("classify: operator acts on " + std::to_string(p.num_qubits()) +
                                    " qubits, code has " + std::to_string(code.num_qubits()));
    }
    if (!p.is_hermitian()) {
        throw std::invalid_argument("classify: operator must be Hermitian");
    }
    for (const auto& g : code.generators()) {
        if (!commutes(g, p)) {
            return {LogicalClass::Tag::AntiCommutes, std::nullopt};
        }
    }
    if (auto element = code.group_element_matching(p)) {
        return {element->phase() == p.phase() ? LogicalClass::Tag::Stabilizer
                                              : LogicalClass::Tag::NegativeStabilizer,
                std::nullopt};
    }
    LogicalClass out{LogicalClass::Tag::Logical, std::nullopt};
    if (const auto& ref = code.reference_logical()) {
        const PauliOperator relative = multiply(p, *ref);
        if (auto element = code.group_element_matching(relative)) {
            // p·ref = λ·s with s in the group, so p acts as λ·ref on the code space.
            const int lambda = exponent(relative.phase()) - exponent(element->phase());
            const Phase ratio = phase_from_exponent(lambda);
            if (ratio == Phase::PlusOne) {
                out.action_sign = 1;
            } else if (ratio == Phase::MinusOne) {
                out.action_sign = -1;
            }
        }
    }
    return out;
}

bool has_positive_z_subgroup(const StabilizerCode& code) {
    const auto& signs = code.z_subgroup().signs;
    return std::all_of(signs.begin(), signs.end(), [](int s) { return s > 0; });
}

StabilizerCode normalize_signs(const StabilizerCode& code) {
    if (has_positive_z_subgroup(code)) {
        return code;
    }
    const auto& gens = code.generators();
    const std::size_t n = code.num_qubits();
    std::vector<PauliOperator> out = gens;

    // Z-type generators stay in place with + sign; the remaining Z-type
    // directions are products that each replace one non-Z generator.
    std::vector<bool> z_type(gens.size(), false);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_z_type()) {
            z_type[i] = true;
            out[i].set_phase(Phase::PlusOne);
        }
    }
    const BitMatrix combos = z_type_combinations(gens, n);
    BitMatrix reduced(0, gens.size());
    for (std::size_t r = 0; r < combos.rows(); ++r) {
        BitVector c = combos.row_vector(r);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (z_type[i]) {
                c.set(i, false);
            }
        }
        if (c.any()) {
            reduced.append_row(c);
        }
    }
    const RowEchelon e = rref(reduced);
    for (std::size_t r = 0; r < e.rank; ++r) {
        PauliOperator replacement = product_of(gens, e.matrix.row_vector(r));
        replacement.set_phase(Phase::PlusOne);
        out[e.pivots[r]] = std::move(replacement);
    }
    return StabilizerCode::validate(std::move(out), code.name());
}

BitMatrix z_subgroup_basis(const StabilizerCode& code) { return code.z_subgroup().basis; }

DistanceReport verify_distance_3(const StabilizerCode& code) {
    if (code.num_logical() != 1) {
        throw std::invalid_argument("verify_distance_3 requires a code with one logical qubit, got k=" +
                                    std::to_string(code.num_logical()));
    }
    const std::size_t n = code.num_qubits();
    static constexpr char kLetters[3] = {'X', 'Y', 'Z'};
    auto make = [n](std::size_t q, char a) {
        std::string s(n, 'I');
        s[q] = a;
        return PauliOperator::from_string(s);
    };

    DistanceReport report;
    report.operators_checked = 3 * n + 9 * (n * (n - 1) / 2);

    // Violations collected per leading qubit, merged in order afterwards.
    std::vector<std::vector<PauliOperator>> found(n);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t qi = 0; qi < static_cast<std::ptrdiff_t>(n); ++qi) {
        const auto q1 = static_cast<std::size_t>(qi);
        for (char a : kLetters) {
            const PauliOperator single = make(q1, a);
            if (classify(code, single).tag == LogicalClass::Tag::Logical) {
                found[q1].push_back(single);
            }
            for (std::size_t q2 = q1 + 1; q2 < n; ++q2) {
                for (char b : kLetters) {
                    const PauliOperator pair = multiply(single, make(q2, b));
                    if (classify(code, pair).tag == LogicalClass::Tag::Logical) {
                        found[q1].push_back(pair);
                    }
                }
            }
        }
    }
    for (auto& batch : found) {
        for (auto& p : batch) {
            report.violations.push_back(std::move(p));
        }
    }
    report.passed = report.violations.empty();
    return report;
}

void write_code(std::ostream& out, const StabilizerCode& code) {
    out << "n=" << code.num_qubits() << " name=" << code.name() << '\n';
    for (const auto& g : code.generators()) {
        out << g.to_string() << '\n';
    }
}

StabilizerCode read_code(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t n = 0;
    std::string name;
    bool have_header = false;
    std::vector<PauliOperator> gens;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (!have_header) {
            static constexpr std::string_view kNameKey = " name=";
            if (line.rfind("n=", 0) != 0) {
                throw CodeFileError(line_no, "expected header 'n=<int> name=<string>'");
            }
            const auto name_pos = line.find(kNameKey);
            if (name_pos == std::string::npos) {
                throw CodeFileError(line_no, "header is missing ' name='");
            }
            const char* first = line.data() + 2;
            const char* last = line.data() + name_pos;
            auto [ptr, ec] = std::from_chars(first, last, n);
            if (ec != std::errc{} || ptr != last || n == 0) {
                throw CodeFileError(line_no, "invalid qubit count in header");
            }
            name = line.substr(name_pos + kNameKey.size());
            have_header = true;
            continue;
        }
        PauliOperator g;
        try {
            g = PauliOperator::from_string(line);
        } catch (const std::invalid_argument& e) {
            throw CodeFileError(line_no, e.what());
        }
        if (line.front() != '+' && line.front() != '-') {
            throw CodeFileError(line_no, "generator must start with '+' or '-'");
        }
        if (g.num_qubits() != n) {
            throw CodeFileError(line_no, "generator has " + std::to_string(g.num_qubits()) + " qubits, header says " +
                                             std::to_string(n));
        }
        gens.push_back(std::move(g));
    }
    if (!have_header) {
        throw CodeFileError(line_no, "empty code file");
    }
    if (gens.empty()) {
        throw CodeFileError(line_no, "code file has no generators");
    }
    return StabilizerCode::validate(std::move(gens), std::move(name));
}

}  // namespace qmetro
