#include "qmetro/classical_rm.hpp"

#include <algorithm>
#include <string>

#include "qmetro/gf2.hpp"

namespace qmetro {

ClassicalCode ClassicalCode::from_generator(BitMatrix generator) {
    ClassicalCode c;
    c.length = generator.cols();
    c.dimension = rank(generator);
    c.generator = std::move(generator);
    return c;
}

BigInt WeightEnumerator::total() const {
    BigInt sum = 0;
    for (const auto& a : coefficients) {
        sum += a;
    }
    return sum;
}

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt out = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

BigInt krawtchouk(std::size_t n, std::size_t j, std::size_t i) {
    BigInt sum = 0;
    for (std::size_t s = 0; s <= std::min(i, j); ++s) {
        BigInt term = binomial(i, s) * binomial(n - i, j - s);
        if (s % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

namespace {

void products_of_size(std::size_t m, std::size_t size, std::size_t start, std::vector<std::size_t>& chosen,
                      std::vector<std::vector<std::size_t>>& out) {
    if (chosen.size() == size) {
        out.push_back(chosen);
        return;
    }
    for (std::size_t i = start; i <= m; ++i) {
        chosen.push_back(i);
        products_of_size(m, size, i + 1, chosen, out);
        chosen.pop_back();
    }
}

}  // namespace

ClassicalCode rm_generator(std::size_t r, std::size_t m) {
    if (r > m || m > 24) {
        throw std::invalid_argument("rm_generator: need 0 <= r <= m <= 24, got r=" + std::to_string(r) +
                                    " m=" + std::to_string(m));
    }
    const std::size_t len = std::size_t{1} << m;
    BitMatrix g(0, len);

    BitVector ones(len);
    for (std::size_t p = 0; p < len; ++p) {
        ones.set(p);
    }
    g.append_row(ones);

    std::vector<BitVector> v(m + 1);
    for (std::size_t i = 1; i <= m; ++i) {
        v[i] = BitVector(len);
        for (std::size_t p = 0; p < len; ++p) {
            if ((p >> (i - 1)) & 1U) {
                v[i].set(p);
            }
        }
    }
    for (std::size_t size = 1; size <= r; ++size) {
        std::vector<std::vector<std::size_t>> sets;
        std::vector<std::size_t> chosen;
        products_of_size(m, size, 1, chosen, sets);
        for (const auto& set : sets) {
            BitVector row = v[set.front()];
            for (std::size_t k = 1; k < set.size(); ++k) {
                row &= v[set[k]];
            }
            g.append_row(row);
        }
    }
    return ClassicalCode::from_generator(std::move(g));
}

ClassicalCode shorten(const ClassicalCode& code) {
    const BitMatrix& g = code.generator;
    if (g.rows() == 0 || g.row_vector(0).popcount() != g.cols()) {
        throw std::invalid_argument("shorten: first generator row must be all ones");
    }
    BitMatrix out(g.rows() - 1, g.cols() - 1);
    for (std::size_t r = 1; r < g.rows(); ++r) {
        for (std::size_t c = 1; c < g.cols(); ++c) {
            if (g.get(r, c)) {
                out.set(r - 1, c - 1);
            }
        }
    }
    return ClassicalCode::from_generator(std::move(out));
}

ClassicalCode dual(const ClassicalCode& code) { return ClassicalCode::from_generator(kernel_basis(code.generator)); }

namespace {

std::vector<BitVector> independent_rows(const ClassicalCode& code) {
    const RowEchelon e = rref(code.generator);
    std::vector<BitVector> rows;
    for (std::size_t r = 0; r < e.rank; ++r) {
        rows.push_back(e.matrix.row_vector(r));
    }
    return rows;
}

WeightEnumerator to_enumerator(const std::vector<std::uint64_t>& counts) {
    WeightEnumerator w;
    w.coefficients.reserve(counts.size());
    for (auto c : counts) {
        w.coefficients.emplace_back(c);
    }
    return w;
}

void require_enumerable(const ClassicalCode& code) {
    if (code.dimension > kMaxEnumerationDimension) {
        throw DimensionTooLarge("code dimension " + std::to_string(code.dimension) + " exceeds enumeration limit " +
                                std::to_string(kMaxEnumerationDimension));
    }
}

}  // namespace

WeightEnumerator weight_enumerator(const ClassicalCode& code) {
    require_enumerable(code);
    const auto basis = independent_rows(code);
    const std::size_t dim = basis.size();
    const std::size_t len = code.length;

    // The top `split` basis rows pick a coset offset per task; each task walks
    // the remaining `inner` rows in Gray-code order, one XOR per step.
    const std::size_t split = std::min<std::size_t>(dim, 10);
    const std::size_t inner = dim - split;
    const std::uint64_t tasks = std::uint64_t{1} << split;
    const std::uint64_t steps = std::uint64_t{1} << inner;

    std::vector<std::uint64_t> counts(len + 1, 0);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(len + 1, 0);
#pragma omp for schedule(dynamic)
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(tasks); ++t) {
            BitVector word(len);
            for (std::size_t b = 0; b < split; ++b) {
                if ((static_cast<std::uint64_t>(t) >> b) & 1U) {
                    word ^= basis[inner + b];
                }
            }
            ++local[word.popcount()];
            for (std::uint64_t s = 1; s < steps; ++s) {
                word ^= basis[static_cast<std::size_t>(std::countr_zero(s))];
                ++local[word.popcount()];
            }
        }
#pragma omp critical
        for (std::size_t i = 0; i <= len; ++i) {
            counts[i] += local[i];
        }
    }
    return to_enumerator(counts);
}

WeightEnumerator weight_enumerator_reference(const ClassicalCode& code) {
    require_enumerable(code);
    const auto basis = independent_rows(code);
    std::vector<std::uint64_t> counts(code.length + 1, 0);
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << basis.size()); ++c) {
        BitVector word(code.length);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if ((c >> b) & 1U) {
                word ^= basis[b];
            }
        }
        ++counts[word.popcount()];
    }
    return to_enumerator(counts);
}

WeightEnumerator macwilliams(const WeightEnumerator& w, const BigInt& code_size) {
    if (code_size <= 0 || w.total() != code_size) {
        throw std::invalid_argument("macwilliams: code size does not match the enumerator total");
    }
    const std::size_t n = w.length();
    WeightEnumerator out;
    out.coefficients.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        BigInt sum = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (w.coefficients[i] != 0) {
                sum += w.coefficients[i] * krawtchouk(n, j, i);
            }
        }
        if (sum % code_size != 0) {
            throw std::domain_error("macwilliams: coefficient of weight " + std::to_string(j) +
                                    " is not an integer; inconsistent input");
        }
        out.coefficients[j] = sum / code_size;
    }
    return out;
}

}  // namespace qmetro
