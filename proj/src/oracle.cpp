#include "qmetro/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>

#include <omp.h>

namespace qmetro {

namespace {

using Index = std::uint32_t;

struct PauliMasks {
    Index x = 0;
    Index z = 0;
    Amplitude coeff;  // i^phase · i^{|x∧z|}
};

Amplitude i_power(unsigned e) {
    switch (e % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

PauliMasks masks_of(const PauliOperator& p) {
    PauliMasks m;
    for (auto q : p.x().ones()) m.x |= Index{1} << q;
    for (auto q : p.z().ones()) m.z |= Index{1} << q;
    m.coeff = i_power(exponent(p.phase()) + static_cast<unsigned>(std::popcount(m.x & m.z)));
    return m;
}

double parity_sign(Index v) { return (std::popcount(v) & 1) ? -1.0 : 1.0; }

void require_small(std::size_t n) {
    if (n > kMaxOracleQubits) {
        throw std::invalid_argument("oracle supports at most " + std::to_string(kMaxOracleQubits) + " qubits, got " +
                                    std::to_string(n));
    }
}

using Sparse = std::map<Index, Amplitude>;

// (I + g)/2 on a sparse state.
Sparse project(const PauliMasks& g, const Sparse& psi) {
    Sparse out;
    for (const auto& [b, a] : psi) {
        out[b] += 0.5 * a;
        out[b ^ g.x] += 0.5 * g.coeff * parity_sign(b & g.z) * a;
    }
    for (auto it = out.begin(); it != out.end();) {
        it = std::abs(it->second) < 1e-14 ? out.erase(it) : std::next(it);
    }
    return out;
}

}  // namespace

StateVector apply_pauli(const PauliOperator& p, const StateVector& psi) {
    const PauliMasks m = masks_of(p);
    StateVector out(psi.size());
    for (Index b = 0; b < psi.size(); ++b) {
        out[b ^ m.x] = m.coeff * parity_sign(b & m.z) * psi[b];
    }
    return out;
}

Amplitude inner(const StateVector& a, const StateVector& b) {
    Amplitude s{0, 0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

CodespaceBasis codespace(const StabilizerCode& code) {
    const std::size_t n = code.num_qubits();
    require_small(n);
    std::vector<PauliMasks> diagonal;
    std::vector<PauliMasks> mixing;
    for (const auto& g : code.generators()) {
        (g.x().none() ? diagonal : mixing).push_back(masks_of(g));
    }

    std::vector<Sparse> found;
    const Index dim = Index{1} << n;
    for (Index b = 0; b < dim && found.size() < 3; ++b) {
        bool killed = false;
        for (const auto& g : diagonal) {
            if ((g.coeff * parity_sign(b & g.z)).real() < 0) {
                killed = true;
                break;
            }
        }
        if (killed) continue;
        Sparse psi{{b, Amplitude{1, 0}}};
        for (const auto& g : mixing) {
            psi = project(g, psi);
            if (psi.empty()) break;
        }
        // Gram-Schmidt against the states kept so far.
        for (const auto& f : found) {
            Amplitude overlap{0, 0};
            for (const auto& [i, a] : f) {
                if (auto it = psi.find(i); it != psi.end()) overlap += std::conj(a) * it->second;
            }
            for (const auto& [i, a] : f) psi[i] -= overlap * a;
        }
        double norm = 0;
        for (const auto& [i, a] : psi) norm += std::norm(a);
        if (norm < 1e-12) continue;
        norm = std::sqrt(norm);
        Sparse unit;
        for (const auto& [i, a] : psi) {
            if (std::abs(a) > 1e-14) unit[i] = a / norm;
        }
        found.push_back(std::move(unit));
    }
    if (found.size() != 2) {
        throw CodespaceDimensionMismatch(found.size());
    }
    CodespaceBasis basis;
    basis.n = n;
    basis.zero.assign(dim, Amplitude{0, 0});
    basis.one.assign(dim, Amplitude{0, 0});
    for (const auto& [i, a] : found[0]) basis.zero[i] = a;
    for (const auto& [i, a] : found[1]) basis.one[i] = a;
    return basis;
}

long long elementary_symmetric_signs(unsigned long long bits, std::size_t n, std::size_t k) {
    // e[j] after processing qubits 0..q: e_j(s_0..s_q).
    std::vector<long long> e(k + 1, 0);
    e[0] = 1;
    for (std::size_t q = 0; q < n; ++q) {
        const long long s = ((bits >> q) & 1ULL) ? -1 : 1;
        for (std::size_t j = std::min(k, q + 1); j >= 1; --j) {
            e[j] += s * e[j - 1];
        }
    }
    return e[k];
}

GeffMatrix g_eff_matrix(const CodespaceBasis& basis, std::size_t k) {
    const std::size_t dim = basis.zero.size();
    const StateVector* states[2] = {&basis.zero, &basis.one};
    GeffMatrix out;
    std::vector<double> g(dim);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(dim); ++b) {
        g[static_cast<std::size_t>(b)] =
            static_cast<double>(elementary_symmetric_signs(static_cast<unsigned long long>(b), basis.n, k));
    }
    for (int a = 0; a < 2; ++a) {
        for (int c = 0; c < 2; ++c) {
            Amplitude s{0, 0};
            for (std::size_t b = 0; b < dim; ++b) {
                s += std::conj((*states[a])[b]) * g[b] * (*states[c])[b];
            }
            out.m[a][c] = s;
        }
    }
    const auto& m = out.m;
    out.hermiticity_residual = std::max({std::abs(m[0][1] - std::conj(m[1][0])), std::abs(m[0][0].imag()),
                                         std::abs(m[1][1].imag())});
    if (out.hermiticity_residual > kCheckTolerance) {
        throw std::runtime_error("logical G matrix is not Hermitian (residual " +
                                 std::to_string(out.hermiticity_residual) + ")");
    }
    const double d = m[0][0].real() - m[1][1].real();
    out.gap = std::sqrt(d * d + 4 * std::norm(m[0][1]));

    // Traceless part T; singular values are sqrt of eigenvalues of T†T.
    const Amplitude half_trace = 0.5 * (m[0][0] + m[1][1]);
    const Amplitude t00 = m[0][0] - half_trace, t01 = m[0][1], t10 = m[1][0], t11 = m[1][1] - half_trace;
    const double p = std::norm(t00) + std::norm(t01) + std::norm(t10) + std::norm(t11);
    const double det = std::abs(t00 * t11 - t01 * t10);
    const double disc = std::sqrt(std::max(0.0, p * p - 4 * det * det));
    out.traceless_singular_values = {std::sqrt(0.5 * (p + disc)), std::sqrt(std::max(0.0, 0.5 * (p - disc)))};
    return out;
}

double g_eff_gap(const CodespaceBasis& basis, std::size_t k) { return g_eff_matrix(basis, k).gap; }

double g_eff_gap(const StabilizerCode& code, std::size_t k) { return g_eff_gap(codespace(code), k); }

KlReport knill_laflamme_check(const StabilizerCode& code, const CodespaceBasis& basis, const KlOptions& options) {
    const std::size_t n = code.num_qubits();
    for (char c : options.letters) {
        if (c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument(std::string("invalid error letter '") + c + "'");
        }
    }
    std::string letters = options.letters;
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    if (letters.empty()) {
        throw std::invalid_argument("no error letters given");
    }

    // Enumerate every error as a string, then check in parallel.
    std::vector<std::string> errors;
    for (std::size_t w = 1; w <= std::min(options.max_weight, n); ++w) {
        std::vector<std::size_t> subset(w);
        for (std::size_t i = 0; i < w; ++i) subset[i] = i;
        while (true) {
            std::vector<std::size_t> digit(w, 0);
            while (true) {
                std::string s(n, 'I');
                for (std::size_t i = 0; i < w; ++i) s[subset[i]] = letters[digit[i]];
                errors.push_back("+" + s);
                std::size_t i = w;
                while (i > 0 && digit[i - 1] + 1 == letters.size()) digit[--i] = 0;
                if (i == 0) break;
                ++digit[i - 1];
            }
            std::size_t i = w;
            while (i > 0 && subset[i - 1] == n - w + (i - 1)) --i;
            if (i == 0) break;
            ++subset[i - 1];
            for (std::size_t j = i; j < w; ++j) subset[j] = subset[j - 1] + 1;
        }
    }

    std::vector<double> residual(errors.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t e = 0; e < static_cast<std::ptrdiff_t>(errors.size()); ++e) {
        const auto op = PauliOperator::from_string(errors[static_cast<std::size_t>(e)]);
        const StateVector e0 = apply_pauli(op, basis.zero);
        const StateVector e1 = apply_pauli(op, basis.one);
        const double off = std::abs(inner(basis.zero, e1));
        const double diag = std::abs(inner(basis.zero, e0) - inner(basis.one, e1));
        residual[static_cast<std::size_t>(e)] = std::max(off, diag);
    }

    KlReport r;
    r.operators_checked = errors.size();
    for (std::size_t e = 0; e < errors.size(); ++e) {
        if (residual[e] > r.worst_residual) {
            r.worst_residual = residual[e];
            r.worst_operator = errors[e];
        }
    }
    r.passed = r.worst_residual <= kCheckTolerance;
    return r;
}

KlReport knill_laflamme_check(const StabilizerCode& code, const KlOptions& options) {
    return knill_laflamme_check(code, codespace(code), options);
}

}  // namespace qmetro
