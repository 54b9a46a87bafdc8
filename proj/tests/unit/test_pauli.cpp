#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "qmetro/pauli.hpp"

using namespace qmetro;

namespace {

using C = std::complex<double>;
using Mat = std::vector<C>;  // dim × dim, row-major

// Dense matrix of p with qubit j on bit j of the basis index.
Mat dense(const PauliOperator& p) {
    const std::size_t n = p.num_qubits();
    const std::size_t dim = std::size_t{1} << n;
    const C phases[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Mat m(dim * dim, C{0, 0});
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t row = col;
        C amp = phases[exponent(p.phase())];
        for (std::size_t q = 0; q < n; ++q) {
            const bool bit = (col >> q) & 1;
            switch (p.letter(q)) {
                case 'X': row ^= std::size_t{1} << q; break;
                case 'Z': if (bit) amp = -amp; break;
                case 'Y':
                    row ^= std::size_t{1} << q;
                    amp *= bit ? C{0, -1} : C{0, 1};
                    break;
                default: break;
            }
        }
        m[row * dim + col] = amp;
    }
    return m;
}

Mat matmul(const Mat& a, const Mat& b) {
    const auto dim = static_cast<std::size_t>(std::sqrt(static_cast<double>(a.size())));
    Mat c(a.size(), C{0, 0});
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k)
            for (std::size_t j = 0; j < dim; ++j) c[i * dim + j] += a[i * dim + k] * b[k * dim + j];
    return c;
}

bool close(const Mat& a, const Mat& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > 1e-12) return false;
    return true;
}

PauliOperator random_pauli(std::mt19937_64& rng, std::size_t n, bool hermitian = false) {
    std::bernoulli_distribution bit(0.5);
    BitVector x(n), z(n);
    for (std::size_t q = 0; q < n; ++q) {
        x.set(q, bit(rng));
        z.set(q, bit(rng));
    }
    std::uniform_int_distribution<int> ph(0, 3);
    const int e = hermitian ? 2 * (ph(rng) % 2) : ph(rng);
    return PauliOperator(x, z, phase_from_exponent(e));
}

}  // namespace

TEST_CASE("multiply examples") {
    const auto xz = PauliOperator::from_string("XI") * PauliOperator::from_string("ZI");
    CHECK(xz.phase() == Phase::MinusI);
    CHECK(xz.x() == BitVector::from_string("10"));
    CHECK(xz.z() == BitVector::from_string("10"));

    const auto zz = PauliOperator::from_string("+ZZI");
    CHECK((zz * zz) == PauliOperator::identity(3));
    CHECK((zz * PauliOperator::from_string("+IZZ")) == PauliOperator::from_string("+ZIZ"));
    CHECK((PauliOperator::from_string("Y") * PauliOperator::from_string("Y")) == PauliOperator::from_string("+I"));
    CHECK((PauliOperator::from_string("Z") * PauliOperator::from_string("X")).phase() == Phase::PlusI);
    CHECK_THROWS_AS(multiply(PauliOperator(2), PauliOperator(3)), std::invalid_argument);
}

TEST_CASE("commutes examples") {
    CHECK_FALSE(commutes(PauliOperator::from_string("X"), PauliOperator::from_string("Z")));
    CHECK(commutes(PauliOperator::from_string("ZZZII"), PauliOperator::from_string("IIIZZ")));
    CHECK_FALSE(commutes(PauliOperator::from_string("ZZZIIIIII"), PauliOperator::from_string("XXXXXXIII")));
    CHECK(commutes(PauliOperator::from_string("XX"), PauliOperator::from_string("ZZ")));
    CHECK_THROWS_AS(commutes(PauliOperator(2), PauliOperator(3)), std::invalid_argument);
}

TEST_CASE("weight examples") {
    CHECK(weight(PauliOperator::identity(9)) == 0);
    const std::size_t q[] = {0, 1, 2};
    CHECK(weight(PauliOperator::z_on(9, q)) == 3);
    CHECK(weight(PauliOperator::from_string("+XXXXXXIII")) == 6);
    CHECK(weight(PauliOperator::from_string("XYZI")) == 3);
}

TEST_CASE("string form") {
    CHECK(PauliOperator::from_string("-XYZI").to_string() == "-XYZI");
    CHECK(PauliOperator::from_string("XYZI").to_string() == "+XYZI");
    CHECK(PauliOperator::from_string("-Y").sign() == -1);
    CHECK_THROWS(PauliOperator::from_string("XQ"));
    auto p = PauliOperator::from_string("X");
    p.set_phase(Phase::PlusI);
    CHECK_FALSE(p.is_hermitian());
    CHECK_THROWS_AS(p.to_string(), std::domain_error);
    CHECK(PauliOperator::from_string("+ZIZ").is_z_type());
    CHECK(PauliOperator::from_string("+ZIZ").negated().to_string() == "-ZIZ");
}

TEST_CASE("random round trip of string form") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const auto p = random_pauli(rng, 1 + i % 70, true);
        CHECK(PauliOperator::from_string(p.to_string()) == p);
    }
}

TEST_CASE("products agree with the dense matrix oracle") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 1500; ++i) {
        const std::size_t n = 1 + i % 3;
        const auto a = random_pauli(rng, n), b = random_pauli(rng, n), c = random_pauli(rng, n);
        CHECK(close(dense(a * b), matmul(dense(a), dense(b))));
        CHECK(((a * b) * c) == (a * (b * c)));
    }
}

TEST_CASE("random commutation and hermiticity properties") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 2000; ++i) {
        const std::size_t n = 1 + i % 80;
        const auto a = random_pauli(rng, n, true), b = random_pauli(rng, n, true);
        const auto ab = a * b, ba = b * a;
        CHECK(ab.x() == ba.x());
        CHECK(ab.z() == ba.z());
        CHECK(commutes(a, b) == (ab.phase() == ba.phase()));
        if (!commutes(a, b)) CHECK(ab.phase() == (ba.phase() * Phase::MinusOne));
        if (commutes(a, b)) CHECK(ab.is_hermitian());
        CHECK(weight(a) == (a.x() | a.z()).popcount());
    }
}
