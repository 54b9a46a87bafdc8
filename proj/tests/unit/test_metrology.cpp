#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "qmetro/constructors.hpp"
#include "qmetro/metrology.hpp"
#include "qmetro/parallel.hpp"

using namespace qmetro;

namespace {

void check_invariants(const LogicalCensus& c) {
    CHECK(c.total() == static_cast<std::uint64_t>(binomial(c.n, c.k)));
    CHECK(std::accumulate(c.degrees.begin(), c.degrees.end(), std::uint64_t{0}) == c.k * c.ell);
    if (c.k == 3 && c.ell > 0) {
        const auto dmax = *std::max_element(c.degrees.begin(), c.degrees.end());
        CHECK(static_cast<double>(dmax) >= 3.0 * static_cast<double>(c.ell) / static_cast<double>(c.n));
    }
    CHECK(c.signs_consistent());
}

}  // namespace

TEST_CASE("census examples") {
    CHECK(census(thin_surface(7)).ell == 7);
    CHECK(census(shor(3)).ell == 27);
    CHECK(census(qrm1(3)).ell == 7);
    CHECK_THROWS_AS(census(shor(3), 0), std::invalid_argument);
    CHECK_THROWS_AS(census(shor(3), 10), std::invalid_argument);
}

TEST_CASE("census kernel matches the classify-based reference") {
    const std::vector<StabilizerCode> codes = {shor(3), shor(4), qrm1(3), qrm1(4), thin_surface(2), thin_surface(3),
                                               generalized_shor(4, 3), concatenate_with_repetition(qrm1(3), 2),
                                               repetition_code(5), phase_flip_code()};
    for (const auto& code : codes) {
        for (std::size_t k = 1; k <= std::min<std::size_t>(4, code.num_qubits()); ++k) {
            const auto ref = census_reference(code, k);
            CHECK(census(code, k) == ref);
            CHECK(census_serial(code, k) == ref);
            check_invariants(ref);
        }
    }
}

TEST_CASE("census is independent of the thread count") {
    const auto code = qrm1(5);
    const int saved = thread_count();
    set_thread_count(1);
    const auto one = census(code, 3, {64});
    set_thread_count(4);
    const auto four = census(code, 3, {64});
    set_thread_count(saved);
    CHECK(one == four);
    CHECK(one.samples.size() == 64);
    CHECK(std::is_sorted(one.samples.begin(), one.samples.end()));
    CHECK(census(code, 3, {0}).samples.empty());
}

TEST_CASE("thin surface census is L_x") {
    for (std::size_t lx = 2; lx <= 40; ++lx) {
        const auto c = census(thin_surface(lx));
        CHECK(c.ell == lx);
        check_invariants(c);
    }
}

TEST_CASE("generalized shor census is n_r^k") {
    const std::pair<std::size_t, std::size_t> cases[] = {{3, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 4}, {4, 5}, {5, 5}};
    for (auto [k, nr] : cases) {
        const auto c = census(generalized_shor(k, nr), k);
        std::uint64_t expected = 1;
        for (std::size_t i = 0; i < k; ++i) expected *= nr;
        CHECK(c.ell == expected);
        check_invariants(c);
    }
}

TEST_CASE("qfi report examples") {
    const auto q = qfi_report(qrm1(3));
    CHECK(q.qfi_coeff == 196);
    CHECK(q.delta_g_eff == 14);
    REQUIRE(q.closed_form);
    CHECK(q.closed_form->matches);
    CHECK(q.closed_form->flags.empty());

    const auto t = qfi_report(thin_surface(7));
    CHECK(t.qfi_coeff == 196);
    REQUIRE(t.closed_form);
    CHECK(t.closed_form->expected == Rational(196));
    CHECK(t.closed_form->matches);

    const auto s = qfi_report(shor(3));
    CHECK(s.qfi_coeff == 2916);
    REQUIRE(s.closed_form);
    CHECK(s.closed_form->matches);
    REQUIRE(s.closed_form->flags.size() == 1);
    CHECK(s.closed_form->flags[0].find("78732") != std::string::npos);

    for (std::size_t n : {7, 9, 15, 31}) {
        const auto r = qfi_report(repetition_code(n), 3, std::nullopt);
        const BigInt c = binomial(n, 3);
        CHECK(r.noiseless_delta_g == 2 * c);
        CHECK(r.ghz_coeff == 4 * c * c);
        CHECK(r.qfi_coeff == r.delta_g_eff * r.delta_g_eff);
    }
    // Closed form only when the census order matches the block count.
    CHECK_FALSE(qfi_report(generalized_shor(4, 3), 3).closed_form.has_value());
    const auto g4 = qfi_report(generalized_shor(4, 3), 4);
    REQUIRE(g4.closed_form);
    CHECK(g4.closed_form->matches);
    CHECK_FALSE(qfi_report(concatenate_with_repetition(qrm1(3), 2)).closed_form.has_value());
}

TEST_CASE("infer family") {
    CHECK(infer_family("thin_surface_lx4") == Family::ThinSurface);
    CHECK(infer_family("qrm1_m5") == Family::QRM1);
    CHECK(infer_family("shor_nr7") == Family::Shor);
    CHECK(infer_family("generalized_shor_k4_nr3") == Family::GeneralizedShor);
    CHECK(infer_family("phase_flip_rep5") == Family::Concatenated);
    CHECK_FALSE(infer_family("mystery").has_value());
}

TEST_CASE("mu spectrum examples") {
    const auto s = mu_spectrum(9, Rational(4));
    CHECK(s.values[0] == Rational(48));
    CHECK(s.values[2] == Rational(-20));
    const auto z = mu_spectrum(5, Rational(0));
    const std::vector<Rational> expected = {10, -2, -2, 2, 2, -10};
    CHECK(z.values == expected);
    CHECK_THROWS_AS(mu_spectrum(2, Rational(0)), std::invalid_argument);
}

TEST_CASE("mu antisymmetry") {
    for (std::size_t n = 3; n <= 40; ++n)
        for (const Rational beta : {Rational(0), Rational(7, 3), Rational(-5, 2), Rational(11)}) {
            const auto s = mu_spectrum(n, beta);
            for (std::size_t k = 0; k <= n; ++k) CHECK(s.values[k] == -s.values[n - k]);
        }
}

TEST_CASE("mu matches the Z-string sums") {
    // μ_k(0) is the ZZZ eigenvalue on k ones.
    for (std::size_t n = 3; n <= 20; ++n) {
        const auto s = mu_spectrum(n, Rational(0));
        for (std::size_t k = 0; k <= n; ++k) CHECK(BigInt(s.values[k].num()) == z_string_sum(n, 3, k));
    }
}

TEST_CASE("optimal delta g") {
    const auto five = optimal_delta_g(5);
    CHECK(five.value == Rational(10));
    CHECK(five.beta_star == Rational(1));
    const auto nine = optimal_delta_g(9);
    CHECK(nine.value >= Rational(40));
    CHECK(nine.value <= Rational(96));
    for (std::size_t n = 5; n <= 101; n += 4) {
        const auto b = optimal_delta_g(n);
        CHECK(b.lower <= b.value);
        CHECK(b.value <= b.upper);
    }
    for (std::size_t n = 3; n <= 101; ++n) {
        const auto b = optimal_delta_g(n);
        CHECK(BigInt(b.value.num()) <= 2 * binomial(n, 3) * b.value.den());
        // The minimum is attained at beta_star.
        const auto s = mu_spectrum(n, b.beta_star);
        Rational worst(0);
        for (const auto& v : s.values) worst = std::max(worst, abs(v));
        CHECK(Rational(2) * worst == b.value);
    }
    const double ratio = optimal_delta_g(101).value.to_double() / (101.0 * 101.0 * 101.0 / 12.0);
    CHECK(std::abs(ratio - 1.0) < 0.1);
    CHECK_THROWS_AS(optimal_delta_g(2), std::invalid_argument);
}

TEST_CASE("scaling fit") {
    std::vector<std::pair<double, double>> thin, shor_s, qrm;
    for (std::size_t lx = 3; lx <= 21; ++lx) thin.push_back({5.0 * lx - 2, static_cast<double>(census(thin_surface(lx)).ell)});
    CHECK(std::abs(scaling_fit(thin) - 1.0) < 0.1);
    for (std::size_t nr = 3; nr <= 33; ++nr) shor_s.push_back({3.0 * nr, static_cast<double>(census(shor(nr)).ell)});
    CHECK(std::abs(scaling_fit(shor_s) - 3.0) < 0.01);
    for (std::size_t m = 3; m <= 6; ++m)
        qrm.push_back({std::pow(2.0, m) - 1, static_cast<double>(census(qrm1(m)).ell)});
    // ell = n(n-1)/6 exactly; the finite-size slope over m = 3..6 sits above 2.
    CHECK(scaling_fit(qrm) == doctest::Approx(2.0619).epsilon(1e-4));

    CHECK(scaling_fit({{1, 1}, {2, 4}, {4, 16}}) == doctest::Approx(2.0));
    CHECK_THROWS_AS(scaling_fit({{1, 1}, {2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(scaling_fit({{1, 1}, {2, 0}, {3, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(scaling_fit({{1, 1}, {1, 2}, {3, 3}}), std::invalid_argument);
}
