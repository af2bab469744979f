#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "grassvol/complexmat.hpp"
#include "grassvol/gates.hpp"
#include "grassvol/harness.hpp"
#include "grassvol/rng.hpp"

using namespace grassvol;

TEST_CASE("kronecker product block structure") {
    const ComplexMatrix a = ComplexMatrix::from_rows({{1.0, 2.0}, {3.0, 4.0}});
    const ComplexMatrix b = ComplexMatrix::from_rows({{5.0, 6.0}, {7.0, 8.0}});
    const ComplexMatrix k = kron(a, b);
    REQUIRE(k.rows() == 4);
    // (a ox b)_{ip,jq} = a_ij b_pq: top-left block is a11 * b.
    CHECK(k(0, 0) == cplx{5.0, 0.0});
    CHECK(k(0, 2) == cplx{10.0, 0.0});
    CHECK(k(1, 1) == cplx{8.0, 0.0});
    CHECK(k(3, 3) == cplx{32.0, 0.0});
}

TEST_CASE("trace and determinant are multiplicative over kron") {
    CounterRng rng(7, 0);
    const ComplexMatrix a = random_matrix(3, 3, rng);
    const ComplexMatrix b = random_matrix(2, 2, rng);
    const ComplexMatrix k = kron(a, b);
    CHECK(std::abs(k.trace() - a.trace() * b.trace()) < 1e-10);
    const cplx expected = std::pow(det(a), 2.0) * std::pow(det(b), 3.0);
    CHECK(std::abs(det(k) - expected) < 1e-8 * std::abs(expected));
}

TEST_CASE("identity kron identity") {
    const ComplexMatrix k = kron(ComplexMatrix::identity(2), ComplexMatrix::identity(3));
    CHECK((k - ComplexMatrix::identity(6)).max_norm() == 0.0);
}

TEST_CASE("inverse round trip") {
    CounterRng rng(11, 0);
    const ComplexMatrix a = random_matrix(4, 4, rng) + ComplexMatrix::identity(4) * cplx{3.0, 0.0};
    const ComplexMatrix inv = inverse(a);
    CHECK((a * inv - ComplexMatrix::identity(4)).max_norm() < 1e-12);
    CHECK((inv * a - ComplexMatrix::identity(4)).max_norm() < 1e-12);
}

TEST_CASE("determinant of singular matrix is zero") {
    ComplexMatrix a(2, 2);
    a(0, 0) = 1.0;
    a(0, 1) = 2.0;
    a(1, 0) = 2.0;
    a(1, 1) = 4.0;
    CHECK(std::abs(det(a)) < 1e-14);
    CHECK_THROWS_AS(inverse(a), std::invalid_argument);
}

TEST_CASE("hermitian eigensolver on a 2x2 reflection") {
    const HermitianEigen eig = hermitian_eigen(pauli_x());
    REQUIRE(eig.eigenvalues.size() == 2);
    CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
    // Columns of the 2x2 Walsh-Hadamard matrix diagonalize it (up to phase).
    for (std::size_t c = 0; c < 2; ++c) {
        const double sign = c == 0 ? -1.0 : 1.0;
        cplx v0 = eig.eigenvectors(0, c), v1 = eig.eigenvectors(1, c);
        CHECK(std::abs(std::abs(v0) - 1.0 / std::sqrt(2.0)) < 1e-12);
        CHECK(std::abs(v1 - sign * v0) < 1e-12);
    }
}

TEST_CASE("hermitian eigensolver reconstructs random matrices") {
    CounterRng rng(3, 0);
    for (std::size_t n : {2, 3, 5, 8}) {
        const ComplexMatrix h = random_hermitian(n, rng);
        const HermitianEigen eig = hermitian_eigen(h);
        ComplexMatrix d(n, n);
        for (std::size_t i = 0; i < n; ++i) d(i, i) = eig.eigenvalues[i];
        const ComplexMatrix recon = eig.eigenvectors * d * eig.eigenvectors.adjoint();
        CHECK((recon - h).max_norm() < 1e-11);
        CHECK((eig.eigenvectors.adjoint() * eig.eigenvectors - ComplexMatrix::identity(n))
                  .max_norm() < 1e-11);
        for (std::size_t i = 1; i < n; ++i)
            CHECK(eig.eigenvalues[i - 1] <= eig.eigenvalues[i]);
    }
}

TEST_CASE("eigensolver rejects non-hermitian input") {
    ComplexMatrix a(2, 2);
    a(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eigen(a), std::invalid_argument);
}

TEST_CASE("unitary exponential of a projection at full angle") {
    ComplexMatrix p(3, 3);
    p(0, 0) = 1.0;
    p(2, 2) = 1.0;
    const ComplexMatrix e = unitary_exp(p, 2.0 * M_PI);
    CHECK((e - ComplexMatrix::identity(3)).max_norm() < 1e-12);
}

TEST_CASE("unitary exponential matches scalar phases on diagonals") {
    ComplexMatrix h(2, 2);
    h(0, 0) = 0.3;
    h(1, 1) = -1.2;
    const ComplexMatrix e = unitary_exp(h, 1.0);
    CHECK(std::abs(e(0, 0) - std::exp(cplx{0.0, 0.3})) < 1e-13);
    CHECK(std::abs(e(1, 1) - std::exp(cplx{0.0, -1.2})) < 1e-13);
    CHECK(std::abs(e(0, 1)) < 1e-13);
}

TEST_CASE("predicates") {
    CHECK(is_unitary(walsh()));
    CHECK(is_hermitian(walsh()));
    ComplexMatrix e(3, 3);
    e(0, 0) = 1.0;
    CHECK(is_projection(e));
    CHECK_FALSE(is_unitary(e));
    CounterRng rng(5, 0);
    CHECK(is_unitary(random_unitary(4, rng)));
}

TEST_CASE("json round trip") {
    CounterRng rng(9, 0);
    const ComplexMatrix m = random_matrix(2, 3, rng);
    const ComplexMatrix back = matrix_from_json(matrix_to_json(m));
    REQUIRE(back.rows() == 2);
    REQUIRE(back.cols() == 3);
    CHECK((back - m).max_norm() == 0.0);
}

TEST_CASE("counter rng reproducibility and stream independence") {
    CounterRng a(42, 0), b(42, 0), c(42, 1);
    CHECK(a.next_u64() == b.next_u64());
    CHECK(a.next_u64() == b.next_u64());
    CounterRng d(42, 0);
    (void)d.next_u64();
    CHECK(c.next_u64() != d.next_u64());
    for (int i = 0; i < 1000; ++i) {
        const double x = a.next_open01();
        CHECK(x > 0.0);
        CHECK(x < 1.0);
    }
}
