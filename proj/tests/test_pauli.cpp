#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "grassvol/gates.hpp"
#include "grassvol/pauli.hpp"

using namespace grassvol;

namespace {

ComplexMatrix matpow(const ComplexMatrix& m, unsigned p) {
    ComplexMatrix out = ComplexMatrix::identity(m.rows());
    for (unsigned i = 0; i < p; ++i) out = out * m;
    return out;
}

}  // namespace

TEST_CASE("dimension two reduces to the pauli pair") {
    const ClockShiftPair cs = clock_shift(2);
    CHECK((cs.shift - pauli_x()).max_norm() == 0.0);
    CHECK((cs.clock - pauli_z()).max_norm() < 1e-15);
    CHECK((vandermonde_w(2) - walsh()).max_norm() < 1e-15);
}

TEST_CASE("clock and shift have order n") {
    for (std::size_t n = 2; n <= 8; ++n) {
        const ClockShiftPair cs = clock_shift(n);
        CHECK((matpow(cs.shift, n) - ComplexMatrix::identity(n)).max_norm() < 1e-13);
        CHECK((matpow(cs.clock, n) - ComplexMatrix::identity(n)).max_norm() < 1e-13);
        for (std::size_t p = 1; p < n; ++p) {
            CHECK((matpow(cs.shift, p) - ComplexMatrix::identity(n)).max_norm() > 0.5);
            CHECK((matpow(cs.clock, p) - ComplexMatrix::identity(n)).max_norm() > 0.5);
        }
    }
}

TEST_CASE("basic commutation with the primitive root") {
    const std::size_t n = 3;
    const ClockShiftPair cs = clock_shift(n);
    const cplx sigma = std::polar(1.0, 2.0 * M_PI / 3.0);
    CHECK((cs.clock * cs.shift - sigma * (cs.shift * cs.clock)).max_norm() < 1e-14);
}

TEST_CASE("weyl commutation for all powers") {
    for (std::size_t n = 2; n <= 8; ++n) {
        const ClockShiftPair cs = clock_shift(n);
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b) {
                const cplx phase = std::polar(
                    1.0, 2.0 * M_PI * static_cast<double>((a * b) % n) /
                             static_cast<double>(n));
                const ComplexMatrix lhs = matpow(cs.clock, a) * matpow(cs.shift, b);
                const ComplexMatrix rhs =
                    phase * (matpow(cs.shift, b) * matpow(cs.clock, a));
                CHECK((lhs - rhs).max_norm() < 1e-12);
            }
    }
}

TEST_CASE("vandermonde matrix is unitary and conjugate-symmetric in rows") {
    for (std::size_t n = 2; n <= 12; ++n) {
        const ComplexMatrix w = vandermonde_w(n);
        CHECK((w.adjoint() * w - ComplexMatrix::identity(n)).max_norm() < 1e-12);
    }
}

TEST_CASE("dimension three worked matrix") {
    const cplx sigma = std::polar(1.0, 2.0 * M_PI / 3.0);
    const cplx sigma2 = std::polar(1.0, 4.0 * M_PI / 3.0);
    const double s = 1.0 / std::sqrt(3.0);
    ComplexMatrix expected = ComplexMatrix::from_rows(
        {{1.0, 1.0, 1.0}, {1.0, sigma2, sigma}, {1.0, sigma, sigma2}});
    expected = expected * cplx{s, 0.0};
    CHECK((vandermonde_w(3) - expected).max_norm() < 1e-12);
}

TEST_CASE("vandermonde conjugation diagonalizes the shift") {
    for (std::size_t n = 2; n <= 12; ++n) {
        CHECK(diagonalize_shift_error(n) < 1e-12);
        CHECK(diagonalize_shift(n));
    }
}

TEST_CASE("dimension validation") {
    CHECK_THROWS_AS(clock_shift(1), std::invalid_argument);
    CHECK_THROWS_AS(vandermonde_w(0), std::invalid_argument);
}
