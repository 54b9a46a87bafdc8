#include "doctest.h"
#include "qmetro/classical_rm.hpp"
#include "qmetro/constructors.hpp"
#include "qmetro/metrology.hpp"
#include "qmetro/stabilizer_code.hpp"

using namespace qmetro;

namespace {

std::size_t count_if_weight(const StabilizerCode& code, bool z_type, std::size_t w) {
    std::size_t c = 0;
    for (const auto& g : code.generators())
        if (g.is_z_type() == z_type && weight(g) == w) ++c;
    return c;
}

bool same_group(const StabilizerCode& a, const StabilizerCode& b) {
    if (a.num_qubits() != b.num_qubits() || a.generators().size() != b.generators().size()) return false;
    for (const auto& g : b.generators())
        if (classify(a, g).tag != LogicalClass::Tag::Stabilizer) return false;
    return true;
}

}  // namespace

TEST_CASE("thin surface sizes and weights") {
    for (std::size_t lx = 2; lx <= 12; ++lx) {
        const auto code = thin_surface(lx);
        CHECK(code.num_qubits() == 5 * lx - 2);
        CHECK(code.generators().size() == code.num_qubits() - 1);
        CHECK(code.num_logical() == 1);
        CHECK(normalize_signs(code).generators() == code.generators());
        for (const auto& g : code.generators()) {
            CHECK(g.sign() == 1);
            CHECK((weight(g) == 3 || weight(g) == 4));
        }
        CHECK(count_if_weight(code, false, 3) == 4);
        CHECK(count_if_weight(code, false, 4) == 2 * (lx - 2));
        CHECK(count_if_weight(code, true, 3) == 2 * (lx - 1));
        CHECK(count_if_weight(code, true, 4) == lx - 1);
    }
    CHECK(thin_surface(7).num_qubits() == 33);
    CHECK(verify_distance_3(thin_surface(3)).passed);
    CHECK(census(thin_surface(7)).ell == 7);
    CHECK_THROWS_AS(thin_surface(1), std::invalid_argument);
}

TEST_CASE("qrm1") {
    const auto steane = qrm1(3);
    CHECK(steane.num_qubits() == 7);
    CHECK(steane.num_logical() == 1);
    std::size_t xs = 0, zs = 0;
    for (const auto& g : steane.generators()) (g.is_z_type() ? zs : xs)++;
    CHECK(xs == 3);
    CHECK(zs == 3);
    CHECK(rank(steane.check_matrix()) == 6);
    const auto zbar = PauliOperator::from_string("+ZZZZZZZ");
    CHECK(classify(steane, zbar).tag == LogicalClass::Tag::Logical);
    CHECK(classify(steane, zbar).action_sign == 1);
    CHECK(qrm1(4).num_qubits() == 15);
    CHECK(qrm1(4).num_logical() == 1);
    for (std::size_t m = 3; m <= 7; ++m) {
        const auto code = qrm1(m);
        CHECK(code.num_qubits() == (std::size_t{1} << m) - 1);
        CHECK(code.generators().size() == code.num_qubits() - 1);
        CHECK(normalize_signs(code).generators() == code.generators());
    }
    CHECK_THROWS_AS(qrm1(2), std::invalid_argument);
}

TEST_CASE("shor and generalized shor") {
    const auto s = shor(3);
    CHECK(s.num_qubits() == 9);
    CHECK(s.generators().size() == 8);
    CHECK(s.generators()[6] == PauliOperator::from_string("+XXXXXXIII"));
    CHECK(s.generators()[7] == PauliOperator::from_string("+IIIXXXXXX"));
    CHECK(verify_distance_3(shor(4)).passed);
    CHECK(generalized_shor(3, 5).generators() == shor(5).generators());

    const auto g44 = generalized_shor(4, 4);
    CHECK(g44.num_qubits() == 16);
    CHECK(g44.num_logical() == 1);
    const std::size_t cross[] = {0, 4, 8, 12};
    CHECK(classify(g44, PauliOperator::z_on(16, cross)).tag == LogicalClass::Tag::Logical);
    CHECK(census(g44, 4).ell == 256);
    for (std::size_t k = 3; k <= 5; ++k)
        for (std::size_t nr = 3; nr <= 5; ++nr) {
            const auto code = generalized_shor(k, nr);
            CHECK(code.num_logical() == 1);
            CHECK(normalize_signs(code).generators() == code.generators());
            CHECK(verify_distance_3(code).passed);
        }
    CHECK_THROWS_AS(shor(2), std::invalid_argument);
    CHECK_THROWS_AS(generalized_shor(2, 3), std::invalid_argument);
}

TEST_CASE("concatenation with repetition") {
    const auto pf = phase_flip_code();
    const auto c3 = concatenate_with_repetition(pf, 3);
    CHECK(same_group(c3, shor(3)));
    CHECK(same_group(shor(3), c3));
    CHECK(concatenate_with_repetition(pf, 1).generators() == pf.generators());
    const auto c5 = concatenate_with_repetition(pf, 5);
    CHECK(c5.num_qubits() == 15);
    CHECK(census(c5).ell == 125);
    CHECK(verify_distance_3(c5).passed);

    // Inner code with Y letters and a negative sign keeps its phase exactly.
    const auto inner = StabilizerCode::validate({PauliOperator::from_string("-YYI"), PauliOperator::from_string("+ZZZ")});
    const auto lifted = concatenate_with_repetition(inner, 2);
    CHECK(lifted.num_logical() == 1);
    CHECK(lifted.num_qubits() == 6);
    CHECK_THROWS_AS(concatenate_with_repetition(StabilizerCode::validate({PauliOperator::from_string("+ZZ"),
                                                                          PauliOperator::from_string("+XX")}),
                                                3),
                    std::invalid_argument);
}

TEST_CASE("family specs") {
    CHECK(parse_family("thin-surface") == Family::ThinSurface);
    CHECK(parse_family("generalized-shor") == Family::GeneralizedShor);
    CHECK_THROWS_AS(parse_family("toric"), std::invalid_argument);
    for (auto f : {Family::ThinSurface, Family::QRM1, Family::Shor, Family::GeneralizedShor, Family::Concatenated})
        CHECK(parse_family(family_name(f)) == f);
    FamilySpec spec;
    spec.family = Family::GeneralizedShor;
    spec.k = 4;
    spec.nr = 3;
    CHECK(construct(spec).num_qubits() == 12);
    spec.family = Family::Concatenated;
    spec.nr = 4;
    CHECK(construct(spec).num_qubits() == 12);
}
