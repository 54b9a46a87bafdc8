#include "qmetro/metrology.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include <omp.h>

namespace qmetro {

namespace {

void require_order(const StabilizerCode& code, std::size_t k) {
    if (k < 1 || k > code.num_qubits()) {
        throw std::invalid_argument("census: interaction order k=" + std::to_string(k) + " outside [1, n=" +
                                    std::to_string(code.num_qubits()) + "]");
    }
}

// Flattened per-qubit tables for the census hot loop.
//
//  col[q]  : bit g set when generator g has X or Y on qubit q; a Z-string
//            anticommutes with g iff the XOR of col over its support has bit g.
//  prow[q] : the signed Z-subgroup echelon row with pivot q (zero if q is not
//            a pivot). XOR over the support is the unique candidate group
//            element; bit n holds its sign.
struct CensusTables {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t gen_words = 0;
    std::size_t row_words = 0;
    Word last_mask = 0;  // clears bit n in the last row word
    std::vector<Word> col;
    std::vector<Word> prow;
    bool has_reference = false;
    std::vector<Word> ref_indicator;
    std::vector<Word> ref_projection;

    CensusTables(const StabilizerCode& code, std::size_t order) : n(code.num_qubits()), k(order) {
        const auto& gens = code.generators();
        gen_words = words_for(gens.size());
        row_words = words_for(n + 1);
        last_mask = ~(Word{1} << (n % kWordBits));
        col.assign(n * gen_words, 0);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            for (std::size_t q : gens[g].x().ones()) {
                col[q * gen_words + g / kWordBits] |= Word{1} << (g % kWordBits);
            }
        }
        prow.assign(n * row_words, 0);
        const auto& space = code.z_subgroup().signed_space;
        const auto& e = space.echelon();
        for (std::size_t r = 0; r < e.rank; ++r) {
            auto src = e.matrix.row(r);
            std::copy(src.begin(), src.end(), prow.begin() + static_cast<std::ptrdiff_t>(e.pivots[r] * row_words));
        }
        const auto& ref = code.reference_logical();
        if (ref && ref->is_z_type()) {
            has_reference = true;
            ref_indicator.assign(row_words, 0);
            ref_projection.assign(row_words, 0);
            for (std::size_t q : ref->z().ones()) {
                ref_indicator[q / kWordBits] |= Word{1} << (q % kWordBits);
                xor_words(ref_projection, row(prow, q, row_words));
            }
        }
    }

    static std::span<const Word> row(const std::vector<Word>& table, std::size_t q, std::size_t words) {
        return {table.data() + q * words, words};
    }
};

struct Tally {
    std::uint64_t ell = 0;
    std::uint64_t stabilizer = 0;
    std::uint64_t negative = 0;
    std::uint64_t anticommuting = 0;
    std::uint64_t positive_logicals = 0;
    std::uint64_t negative_logicals = 0;
    std::vector<std::uint64_t> degrees;
};

// Depth-first walk over k-subsets whose first element is fixed, carrying the
// running XORs so each leaf costs O(words).
class SubsetWalker {
public:
    SubsetWalker(const CensusTables& t, Tally& tally, std::vector<std::vector<std::size_t>>& samples,
                 std::size_t sample_limit)
        : t_(t),
          tally_(tally),
          samples_(samples),
          sample_limit_(sample_limit),
          col_acc_((t.k + 1) * t.gen_words, 0),
          cand_acc_((t.k + 1) * t.row_words, 0),
          ind_acc_((t.k + 1) * t.row_words, 0),
          chosen_(t.k, 0) {}

    void run_from(std::size_t first) {
        push(0, first);
        if (t_.k == 1) {
            leaf();
        } else {
            walk(1, first + 1);
        }
    }

private:
    void push(std::size_t level, std::size_t q) {
        chosen_[level] = q;
        const std::size_t gw = t_.gen_words;
        const std::size_t rw = t_.row_words;
        Word* col_next = col_acc_.data() + (level + 1) * gw;
        const Word* col_prev = col_acc_.data() + level * gw;
        const Word* col_q = t_.col.data() + q * gw;
        for (std::size_t w = 0; w < gw; ++w) {
            col_next[w] = col_prev[w] ^ col_q[w];
        }
        Word* cand_next = cand_acc_.data() + (level + 1) * rw;
        const Word* cand_prev = cand_acc_.data() + level * rw;
        const Word* row_q = t_.prow.data() + q * rw;
        Word* ind_next = ind_acc_.data() + (level + 1) * rw;
        const Word* ind_prev = ind_acc_.data() + level * rw;
        for (std::size_t w = 0; w < rw; ++w) {
            cand_next[w] = cand_prev[w] ^ row_q[w];
            ind_next[w] = ind_prev[w];
        }
        ind_next[q / kWordBits] |= Word{1} << (q % kWordBits);
    }

    void walk(std::size_t level, std::size_t start) {
        const std::size_t remaining = t_.k - level;
        for (std::size_t q = start; q + remaining <= t_.n; ++q) {
            push(level, q);
            if (level + 1 == t_.k) {
                leaf();
            } else {
                walk(level + 1, q + 1);
            }
        }
    }

    void leaf() {
        const std::size_t gw = t_.gen_words;
        const std::size_t rw = t_.row_words;
        const Word* col = col_acc_.data() + t_.k * gw;
        for (std::size_t w = 0; w < gw; ++w) {
            if (col[w] != 0) {
                ++tally_.anticommuting;
                return;
            }
        }
        const Word* cand = cand_acc_.data() + t_.k * rw;
        const Word* ind = ind_acc_.data() + t_.k * rw;
        if (same_z_part(cand, ind, nullptr, nullptr)) {
            if (sign_bit(cand)) {
                ++tally_.negative;
            } else {
                ++tally_.stabilizer;
            }
            return;
        }
        ++tally_.ell;
        for (std::size_t i = 0; i < t_.k; ++i) {
            ++tally_.degrees[chosen_[i]];
        }
        if (samples_.size() < sample_limit_) {
            samples_.push_back(chosen_);
        }
        if (t_.has_reference) {
            // p·ref is in the group iff its projection reproduces it; the
            // projection's sign bit is the sign of that group element.
            if (same_z_part(cand, ind, t_.ref_projection.data(), t_.ref_indicator.data())) {
                const bool negative = sign_bit(cand) != sign_bit(t_.ref_projection.data());
                ++(negative ? tally_.negative_logicals : tally_.positive_logicals);
            }
        }
    }

    // Compares (a ^ a2) and (b ^ b2) on the first n bits.
    bool same_z_part(const Word* a, const Word* b, const Word* a2, const Word* b2) const {
        const std::size_t rw = t_.row_words;
        for (std::size_t w = 0; w < rw; ++w) {
            Word diff = a[w] ^ b[w];
            if (a2 != nullptr) {
                diff ^= a2[w] ^ b2[w];
            }
            if (w + 1 == rw) {
                diff &= t_.last_mask;
            }
            if (diff != 0) {
                return false;
            }
        }
        return true;
    }

    bool sign_bit(const Word* row) const { return (row[t_.n / kWordBits] >> (t_.n % kWordBits)) & 1U; }

    const CensusTables& t_;
    Tally& tally_;
    std::vector<std::vector<std::size_t>>& samples_;
    std::size_t sample_limit_;
    std::vector<Word> col_acc_;
    std::vector<Word> cand_acc_;
    std::vector<Word> ind_acc_;
    std::vector<std::size_t> chosen_;
};

LogicalCensus finish(std::size_t n, std::size_t k, const Tally& total,
                     std::vector<std::vector<std::vector<std::size_t>>>& per_first, std::size_t sample_limit) {
    LogicalCensus out;
    out.n = n;
    out.k = k;
    out.ell = total.ell;
    out.stabilizer = total.stabilizer;
    out.negative_stabilizer = total.negative;
    out.anticommuting = total.anticommuting;
    out.positive_logicals = total.positive_logicals;
    out.negative_logicals = total.negative_logicals;
    out.degrees = total.degrees;
    for (auto& batch : per_first) {
        for (auto& s : batch) {
            if (out.samples.size() >= sample_limit) {
                return out;
            }
            out.samples.push_back(std::move(s));
        }
    }
    return out;
}

void merge(Tally& into, const Tally& from) {
    into.ell += from.ell;
    into.stabilizer += from.stabilizer;
    into.negative += from.negative;
    into.anticommuting += from.anticommuting;
    into.positive_logicals += from.positive_logicals;
    into.negative_logicals += from.negative_logicals;
    for (std::size_t i = 0; i < into.degrees.size(); ++i) {
        into.degrees[i] += from.degrees[i];
    }
}

LogicalCensus run_census(const StabilizerCode& code, std::size_t k, const CensusOptions& options, bool parallel) {
    require_order(code, k);
    const CensusTables tables(code, k);
    const std::size_t n = code.num_qubits();
    const std::size_t firsts = n - k + 1;

    Tally total;
    total.degrees.assign(n, 0);
    std::vector<std::vector<std::vector<std::size_t>>> per_first(firsts);

#pragma omp parallel if (parallel)
    {
        Tally local;
        local.degrees.assign(n, 0);
#pragma omp for schedule(dynamic)
        for (std::ptrdiff_t f = 0; f < static_cast<std::ptrdiff_t>(firsts); ++f) {
            SubsetWalker walker(tables, local, per_first[static_cast<std::size_t>(f)], options.sample_limit);
            walker.run_from(static_cast<std::size_t>(f));
        }
#pragma omp critical
        merge(total, local);
    }
    return finish(n, k, total, per_first, options.sample_limit);
}

}  // namespace

LogicalCensus census(const StabilizerCode& code, std::size_t k, const CensusOptions& options) {
    return run_census(code, k, options, true);
}

LogicalCensus census_serial(const StabilizerCode& code, std::size_t k, const CensusOptions& options) {
    return run_census(code, k, options, false);
}

LogicalCensus census_reference(const StabilizerCode& code, std::size_t k, const CensusOptions& options) {
    require_order(code, k);
    const std::size_t n = code.num_qubits();
    LogicalCensus out;
    out.n = n;
    out.k = k;
    out.degrees.assign(n, 0);
    std::vector<std::size_t> subset(k);
    for (std::size_t i = 0; i < k; ++i) {
        subset[i] = i;
    }
    while (true) {
        const LogicalClass cls = classify(code, PauliOperator::z_on(n, subset));
        switch (cls.tag) {
            case LogicalClass::Tag::AntiCommutes: ++out.anticommuting; break;
            case LogicalClass::Tag::Stabilizer: ++out.stabilizer; break;
            case LogicalClass::Tag::NegativeStabilizer: ++out.negative_stabilizer; break;
            case LogicalClass::Tag::Logical:
                ++out.ell;
                for (auto q : subset) {
                    ++out.degrees[q];
                }
                if (out.samples.size() < options.sample_limit) {
                    out.samples.push_back(subset);
                }
                if (cls.action_sign == 1) {
                    ++out.positive_logicals;
                } else if (cls.action_sign == -1) {
                    ++out.negative_logicals;
                }
                break;
        }
        // Next subset in lexicographic order.
        std::size_t i = k;
        while (i > 0 && subset[i - 1] == n - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++subset[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            subset[j] = subset[j - 1] + 1;
        }
    }
    return out;
}

BigInt z_string_sum(std::size_t n, std::size_t k, std::size_t ones) { return krawtchouk(n, k, ones); }

std::optional<Family> infer_family(const std::string& name) {
    if (name.find("_rep") != std::string::npos) return Family::Concatenated;
    if (name.starts_with("thin_surface_lx")) return Family::ThinSurface;
    if (name.starts_with("qrm1_m")) return Family::QRM1;
    if (name.starts_with("shor_nr")) return Family::Shor;
    if (name.starts_with("generalized_shor_k")) return Family::GeneralizedShor;
    return std::nullopt;
}

namespace {

Rational power(const Rational& base, unsigned exp) {
    Rational out(1);
    for (unsigned i = 0; i < exp; ++i) {
        out = out * base;
    }
    return out;
}

// Number of repetition blocks a Shor-like code name encodes, if any.
std::optional<std::size_t> shor_blocks(Family family, const std::string& name) {
    if (family == Family::Shor) return 3;
    if (family == Family::Concatenated) {
        return name.starts_with("phase_flip_rep") ? std::optional<std::size_t>(3) : std::nullopt;
    }
    const std::string prefix = "generalized_shor_k";
    if (!name.starts_with(prefix)) return std::nullopt;
    std::size_t blocks = 0;
    const char* first = name.data() + prefix.size();
    auto [ptr, ec] = std::from_chars(first, name.data() + name.size(), blocks);
    if (ec != std::errc{} || ptr == first) return std::nullopt;
    return blocks;
}

std::optional<ClosedFormCheck> closed_form(Family family, const std::string& name, std::size_t n, std::size_t k,
                                           const BigInt& qfi) {
    const auto nn = static_cast<std::int64_t>(n);
    ClosedFormCheck c;
    c.family = family;
    switch (family) {
        case Family::ThinSurface:
            if (k != 3) return std::nullopt;
            c.formula = "4(n+2)^2/25";
            c.expected = Rational(4 * (nn + 2) * (nn + 2), 25);
            break;
        case Family::QRM1:
            if (k != 3) return std::nullopt;
            c.formula = "n^2(n-1)^2/9";
            c.expected = Rational(nn * nn * (nn - 1) * (nn - 1), 9);
            break;
        case Family::Shor:
        case Family::Concatenated:
        case Family::GeneralizedShor:
            if (shor_blocks(family, name) != k || n % k != 0) return std::nullopt;
            c.formula = "4(n/" + std::to_string(k) + ")^" + std::to_string(2 * k);
            c.expected = Rational(4) * power(Rational(nn, static_cast<std::int64_t>(k)), static_cast<unsigned>(2 * k));
            break;
    }
    c.matches = c.expected.is_integer() && BigInt(c.expected.num()) == qfi;
    if (family == Family::Shor && k == 3) {
        const Rational alt = Rational(4) * power(Rational(nn), 6) / Rational(27);
        if (!(alt.is_integer() && BigInt(alt.num()) == qfi)) {
            c.flags.push_back("4n^6/27 = " + alt.to_string() + " disagrees with 4*ell^2 = " + qfi.str() +
                              " (ratio 27); 4n^6/729 is the consistent constant");
        }
    }
    return c;
}

std::int64_t mu_constant(std::int64_t n, std::int64_t j) {
    auto c2 = [](std::int64_t x) { return x * (x - 1) / 2; };
    auto c3 = [](std::int64_t x) { return x * (x - 1) * (x - 2) / 6; };
    return -c3(j) + c2(j) * (n - j) - j * c2(n - j) + c3(n - j);
}

}  // namespace

QfiReport qfi_report(const StabilizerCode& code, const LogicalCensus& c, std::optional<Family> family) {
    QfiReport r;
    r.n = code.num_qubits();
    r.k = c.k;
    r.ell = c.ell;
    r.delta_g_eff = BigInt(2) * c.ell;
    r.qfi_coeff = r.delta_g_eff * r.delta_g_eff;

    BigInt hi = z_string_sum(r.n, r.k, 0);
    BigInt lo = hi;
    for (std::size_t j = 1; j <= r.n; ++j) {
        const BigInt v = z_string_sum(r.n, r.k, j);
        hi = std::max(hi, v);
        lo = std::min(lo, v);
    }
    r.noiseless_delta_g = hi - lo;
    r.noiseless_coeff = r.noiseless_delta_g * r.noiseless_delta_g;
    const BigInt ghz_gap = z_string_sum(r.n, r.k, 0) - z_string_sum(r.n, r.k, r.n);
    r.ghz_coeff = ghz_gap * ghz_gap;
    if (r.k == 3) {
        r.optimal = optimal_delta_g(r.n);
    }
    if (!family) {
        family = infer_family(code.name());
    }
    if (family) {
        r.closed_form = closed_form(*family, code.name(), r.n, r.k, r.qfi_coeff);
    }
    return r;
}

QfiReport qfi_report(const StabilizerCode& code, std::size_t k, std::optional<Family> family) {
    return qfi_report(code, census(code, k), family);
}

MuSpectrum mu_spectrum(std::size_t n, const Rational& beta) {
    if (n < 3) {
        throw std::invalid_argument("mu_spectrum: n must be at least 3");
    }
    MuSpectrum s;
    s.n = n;
    s.beta = beta;
    const auto nn = static_cast<std::int64_t>(n);
    for (std::int64_t j = 0; j <= nn; ++j) {
        s.values.push_back(Rational(mu_constant(nn, j)) - beta * Rational(nn - 2 * j));
    }
    return s;
}

OptimalBound optimal_delta_g(std::size_t n) {
    if (n < 3) {
        throw std::invalid_argument("optimal_delta_g: n must be at least 3");
    }
    const auto nn = static_cast<std::int64_t>(n);
    // μ_j(β) = a_j - β c_j.
    std::vector<std::int64_t> a(n + 1);
    std::vector<std::int64_t> c(n + 1);
    for (std::int64_t j = 0; j <= nn; ++j) {
        a[static_cast<std::size_t>(j)] = mu_constant(nn, j);
        c[static_cast<std::size_t>(j)] = nn - 2 * j;
    }

    // max_j |μ_j(p/q)| = max_j |a_j q - p c_j| / q for q > 0.
    auto evaluate = [&](Int128 p, Int128 q) {
        Int128 best = 0;
        for (std::size_t j = 0; j <= n; ++j) {
            Int128 v = static_cast<Int128>(a[j]) * q - p * c[j];
            if (v < 0) v = -v;
            best = std::max(best, v);
        }
        return best;
    };

    bool have = false;
    Int128 best_val = 0, best_den = 1, best_p = 0, best_q = 1;
    auto consider = [&](Int128 p, Int128 q) {
        if (q == 0) return;
        if (q < 0) {
            p = -p;
            q = -q;
        }
        const Int128 v = evaluate(p, q);
        // Compare v/q with best_val/best_den; ties go to the smaller β.
        const Int128 lhs = v * best_den;
        const Int128 rhs = best_val * q;
        if (!have || lhs < rhs || (lhs == rhs && p * best_q < best_p * q)) {
            have = true;
            best_val = v;
            best_den = q;
            best_p = p;
            best_q = q;
        }
    };

    for (std::size_t i = 0; i <= n; ++i) {
        consider(a[i], c[i]);
        for (std::size_t j = i + 1; j <= n; ++j) {
            consider(static_cast<Int128>(a[i]) - a[j], static_cast<Int128>(c[i]) - c[j]);
            consider(static_cast<Int128>(a[i]) + a[j], static_cast<Int128>(c[i]) + c[j]);
        }
    }

    OptimalBound out;
    out.n = n;
    out.value = Rational::from_wide(2 * best_val, best_den);
    out.beta_star = Rational::from_wide(best_p, best_q);
    out.lower = Rational(2 * (nn + 1) * (nn - 1) * (nn - 3), 24);
    out.upper = Rational(2 * (nn + 7) * nn * (nn - 1), 24);
    return out;
}

double scaling_fit(const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 3) {
        throw std::invalid_argument("scaling_fit: need at least 3 samples");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto [n, ell] = samples[i];
        if (ell <= 0 || n <= 0) {
            throw std::invalid_argument("scaling_fit: n and ell must be positive");
        }
        if (i > 0 && !(n > samples[i - 1].first)) {
            throw std::invalid_argument("scaling_fit: n must be strictly increasing");
        }
        const double x = std::log(n);
        const double y = std::log(ell);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const auto m = static_cast<double>(samples.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace qmetro
