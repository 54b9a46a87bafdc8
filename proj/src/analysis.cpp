#include "qmetro/analysis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <boost/pending/disjoint_sets.hpp>

namespace qmetro {

namespace {

void require_census(const StabilizerCode& code, const LogicalCensus& census, std::optional<std::size_t> k) {
    if (census.n != code.num_qubits()) {
        throw std::invalid_argument("census was taken on " + std::to_string(census.n) + " qubits, code has " +
                                    std::to_string(code.num_qubits()));
    }
    if (k && census.k != *k) {
        throw std::invalid_argument("check needs a census of order " + std::to_string(*k) + ", got " +
                                    std::to_string(census.k));
    }
}

bool z_in_group(const StabilizerCode& code, std::span<const std::size_t> support) {
    const std::size_t n = code.num_qubits();
    BitVector v(n + 1);
    for (auto q : support) {
        v.set(q, true);
    }
    // Compare against the unsigned candidate: ignore the sign column.
    const BitVector candidate = code.z_subgroup().signed_space.project(v);
    for (std::size_t q = 0; q < n; ++q) {
        if (candidate.get(q) != v.get(q)) {
            return false;
        }
    }
    return true;
}

}  // namespace

LdpcCheck ldpc_bound_check(const StabilizerCode& code, const LogicalCensus& census) {
    require_census(code, census, 3);
    LdpcCheck c;
    c.w = code.max_generator_weight();
    c.ell = census.ell;
    const auto w = static_cast<std::int64_t>(c.w);
    c.bound = Rational(2 * w * (w + 1) * static_cast<std::int64_t>(code.num_qubits()), 3);
    c.margin = c.bound - Rational(static_cast<std::int64_t>(c.ell));
    c.passed = c.margin >= Rational(0);
    return c;
}

std::optional<std::pair<std::size_t, std::size_t>> has_z2_stabilizer(const StabilizerCode& code) {
    const std::size_t n = code.num_qubits();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::size_t pair[] = {i, j};
            if (z_in_group(code, pair)) {
                return std::make_pair(i, j);
            }
        }
    }
    return std::nullopt;
}

ZzCheck zz_bound_check(const StabilizerCode& code, const LogicalCensus& census) {
    require_census(code, census, 3);
    ZzCheck c;
    const auto n = static_cast<std::int64_t>(code.num_qubits());
    c.ell = census.ell;
    c.bound = Rational(n * (n - 1), 6);
    c.witness = has_z2_stabilizer(code);
    const Rational ell(static_cast<std::int64_t>(c.ell));
    if (c.witness) {
        c.vacuous = true;
        c.passed = true;
    } else {
        c.passed = ell <= c.bound;
        c.equality = ell == c.bound;
    }
    return c;
}

std::vector<std::vector<std::size_t>> find_repetition_chains(const StabilizerCode& code) {
    const std::size_t n = code.num_qubits();
    std::vector<bool> single(n, false);
    for (auto q : code.single_z_stabilizers()) {
        single[q] = true;
    }
    std::vector<std::size_t> rank(n);
    std::vector<std::size_t> parent(n);
    boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(), parent.data());
    for (std::size_t q = 0; q < n; ++q) {
        sets.make_set(q);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (single[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (single[j]) continue;
            const std::size_t pair[] = {i, j};
            if (z_in_group(code, pair)) {
                sets.union_set(i, j);
            }
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t q = 0; q < n; ++q) {
        if (!single[q]) {
            groups[sets.find_set(q)].push_back(q);
        }
    }
    std::vector<std::vector<std::size_t>> out;
    out.reserve(groups.size());
    for (auto& [root, members] : groups) {
        out.push_back(std::move(members));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return out;
}

const char* to_string(IntersectionCheck::Status status) {
    switch (status) {
        case IntersectionCheck::Status::Pass: return "pass";
        case IntersectionCheck::Status::Fail: return "fail";
        case IntersectionCheck::Status::NotApplicable: return "not_applicable";
    }
    return "?";
}

std::optional<std::vector<std::size_t>> low_weight_z_stabilizer(const StabilizerCode& code, std::size_t max_weight) {
    const std::size_t n = code.num_qubits();
    for (std::size_t w = 1; w <= std::min(max_weight, n); ++w) {
        std::vector<std::size_t> subset(w);
        for (std::size_t i = 0; i < w; ++i) subset[i] = i;
        while (true) {
            if (z_in_group(code, subset)) {
                return subset;
            }
            std::size_t i = w;
            while (i > 0 && subset[i - 1] == n - w + (i - 1)) --i;
            if (i == 0) break;
            ++subset[i - 1];
            for (std::size_t j = i; j < w; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return std::nullopt;
}

IntersectionCheck intersection_bound_check(const StabilizerCode& code, const LogicalCensus& census, std::size_t k0) {
    require_census(code, census, std::nullopt);
    if (k0 >= census.k) {
        throw std::invalid_argument("intersection_bound_check: k0 must be below the census order");
    }
    IntersectionCheck c;
    c.ell = census.ell;
    c.bound = binomial(code.num_qubits(), census.k - k0);
    if (auto blocking = low_weight_z_stabilizer(code, 2 * k0)) {
        c.status = IntersectionCheck::Status::NotApplicable;
        c.blocking = std::move(*blocking);
        return c;
    }
    c.status = BigInt(c.ell) <= c.bound ? IntersectionCheck::Status::Pass : IntersectionCheck::Status::Fail;
    return c;
}

NoGoReport no_go_report(const StabilizerCode& code, const LogicalCensus& census) {
    NoGoReport r;
    r.n = code.num_qubits();
    r.ell = census.ell;
    r.ldpc = ldpc_bound_check(code, census);
    r.w = r.ldpc.w;
    r.zz = zz_bound_check(code, census);
    r.chains = find_repetition_chains(code);
    r.chain_max = r.chains.empty() ? 0 : r.chains.front().size();
    r.chain_fraction = r.n == 0 ? 0.0 : static_cast<double>(r.chain_max) / static_cast<double>(r.n);
    return r;
}

}  // namespace qmetro
