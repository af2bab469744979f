#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "grassvol/gates.hpp"
#include "grassvol/harness.hpp"
#include "grassvol/rng.hpp"
#include "grassvol/synthesis.hpp"

using namespace grassvol;

TEST_CASE("exponent identities over bits") {
    CHECK(mod2_identity_check(2));
    CHECK(mod2_identity_check(3));
    CHECK_THROWS_AS(mod2_identity_check(4), std::invalid_argument);
}

TEST_CASE("exponent bookkeeping as powers of a diagonal unitary") {
    CounterRng rng(51, 0);
    ComplexMatrix v(2, 2);
    v(0, 0) = std::polar(1.0, 2.0 * rng.next_open01() - 1.0);
    v(1, 1) = std::polar(1.0, 2.0 * rng.next_open01() - 1.0);
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y) {
            const int e = x + y - (x ^ y);
            ComplexMatrix lhs = ComplexMatrix::identity(2);
            for (int i = 0; i < e; ++i) lhs = lhs * v;
            ComplexMatrix rhs = ComplexMatrix::identity(2);
            for (int i = 0; i < 2 * x * y; ++i) rhs = rhs * v;
            CHECK((lhs - rhs).max_norm() < 1e-14);
        }
}

TEST_CASE("principal roots of simple unitaries") {
    CHECK((unitary_root(ComplexMatrix::identity(2), 2) - ComplexMatrix::identity(2))
              .max_norm() < 1e-13);
    const ComplexMatrix v = unitary_root(pauli_x(), 2);
    CHECK((v * v - pauli_x()).max_norm() < 1e-12);
    ComplexMatrix d(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = std::exp(cplx{0.0, M_PI / 2.0});
    const ComplexMatrix r = unitary_root(d, 4);
    CHECK(std::abs(r(0, 0) - cplx{1.0, 0.0}) < 1e-13);
    CHECK(std::abs(r(1, 1) - std::exp(cplx{0.0, M_PI / 8.0})) < 1e-13);
    CHECK(std::abs(r(0, 1)) < 1e-13);
}

TEST_CASE("principal root branch puts the -1 eigenvalue on the positive side") {
    const ComplexMatrix r = unitary_root(-ComplexMatrix::identity(2), 2);
    CHECK((r - ComplexMatrix::identity(2) * std::exp(cplx{0.0, M_PI / 2.0})).max_norm() <
          1e-13);
}

TEST_CASE("roots of random unitaries reconstruct") {
    CounterRng rng(53, 0);
    for (int rep = 0; rep < 100; ++rep) {
        const ComplexMatrix u = random_unitary(2, rng);
        for (unsigned d : {2u, 4u}) {
            const ComplexMatrix v = unitary_root(u, d);
            CHECK(is_unitary(v, 1e-11));
            ComplexMatrix vp = ComplexMatrix::identity(2);
            for (unsigned i = 0; i < d; ++i) vp = vp * v;
            CHECK((vp - u).max_norm() < 1e-11);
        }
    }
}

TEST_CASE("root input validation") {
    ComplexMatrix bad(2, 2);
    bad(0, 0) = 2.0;
    CHECK_THROWS_AS(unitary_root(bad, 2), std::invalid_argument);
    CHECK_THROWS_AS(unitary_root(ComplexMatrix::identity(3), 2), std::invalid_argument);
}

TEST_CASE("simulator basics") {
    QuantumCircuit empty;
    empty.t = 2;
    CHECK((simulate(empty).m - ComplexMatrix::identity(4)).max_norm() == 0.0);

    QuantumCircuit one;
    one.t = 2;
    one.gates = {WireCnot{1, 2}};
    CHECK((simulate(one).m - cnot(2, 1, 2).m).max_norm() == 0.0);
    one.gates = {WireCnot{2, 1}};
    CHECK((simulate(one).m - cnot(2, 2, 1).m).max_norm() == 0.0);

    QuantumCircuit cx;
    cx.t = 2;
    cx.gates = {ControlledSingle{1, 2, pauli_x()}};
    CHECK((simulate(cx).m - cnot(2, 1, 2).m).max_norm() == 0.0);
}

TEST_CASE("simulator multiplies later gates on the left") {
    CounterRng rng(57, 0);
    QuantumCircuit c1, c2, joined;
    c1.t = c2.t = joined.t = 3;
    c1.gates = {ControlledSingle{1, 3, random_unitary(2, rng)}, WireCnot{1, 2}};
    c2.gates = {ControlledSingle{2, 3, random_unitary(2, rng)}, WireCnot{3, 1}};
    joined.gates = c1.gates;
    joined.gates.insert(joined.gates.end(), c2.gates.begin(), c2.gates.end());
    const ComplexMatrix expected = simulate(c2).m * simulate(c1).m;
    CHECK((simulate(joined).m - expected).max_norm() < 1e-13);
}

TEST_CASE("simulator validates circuits") {
    QuantumCircuit bad;
    bad.t = 2;
    bad.gates = {WireCnot{1, 3}};
    CHECK_THROWS_AS(simulate(bad), std::invalid_argument);
    bad.gates = {ControlledSingle{1, 2, ComplexMatrix::identity(3)}};
    CHECK_THROWS_AS(simulate(bad), std::invalid_argument);
}

TEST_CASE("direct doubly-controlled X is the expected permutation") {
    const GateMatrix toffoli = direct_controlled(pauli_x(), 2);
    for (std::uint64_t a = 0; a < 8; ++a) {
        const std::uint64_t image = a >= 6 ? (a ^ 1u) : a;
        CHECK(toffoli.m(image, a) == cplx{1.0, 0.0});
    }
}

TEST_CASE("five-gate doubly-controlled synthesis") {
    SUBCASE("bit flip target") {
        const SynthesisReport r = synthesize_ccu(pauli_x());
        CHECK(r.gate_count == 5);
        CHECK(r.max_error < 1e-12);
        // reference is the exact permutation swapping the last two states
        for (std::uint64_t a = 0; a < 8; ++a) {
            const std::uint64_t image = a >= 6 ? (a ^ 1u) : a;
            CHECK(r.reference.m(image, a) == cplx{1.0, 0.0});
        }
    }
    SUBCASE("identity target") {
        const SynthesisReport r = synthesize_ccu(ComplexMatrix::identity(2));
        CHECK(r.max_error < 1e-12);
    }
    SUBCASE("random diagonal phase") {
        ComplexMatrix d = ComplexMatrix::identity(2);
        d(1, 1) = std::polar(1.0, 1.234);
        CHECK(synthesize_ccu(d).max_error < 1e-11);
    }
    SUBCASE("random unitaries") {
        CounterRng rng(61, 0);
        for (int rep = 0; rep < 50; ++rep)
            CHECK(synthesize_ccu(random_unitary(2, rng)).max_error <= 1e-10);
    }
}

TEST_CASE("seventeen-gate triply-controlled synthesis") {
    SUBCASE("bit flip target") {
        const SynthesisReport r = synthesize_cccu(pauli_x());
        CHECK(r.gate_count == 17);
        CHECK(r.max_error < 1e-12);
        for (std::uint64_t a = 0; a < 16; ++a) {
            const std::uint64_t image = a >= 14 ? (a ^ 1u) : a;
            CHECK(r.reference.m(image, a) == cplx{1.0, 0.0});
        }
    }
    SUBCASE("identity target") {
        CHECK(synthesize_cccu(ComplexMatrix::identity(2)).max_error < 1e-12);
    }
    SUBCASE("random unitaries") {
        CounterRng rng(67, 0);
        for (int rep = 0; rep < 50; ++rep)
            CHECK(synthesize_cccu(random_unitary(2, rng)).max_error <= 1e-9);
    }
}

TEST_CASE("gate count table") {
    const auto two = gate_count_table(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].controls == 2);
    CHECK(two[0].count == 5);
    const auto three = gate_count_table(3);
    REQUIRE(three.size() == 2);
    CHECK(three[1].controls == 3);
    CHECK(three[1].count == 17);
    CHECK(three[0].count < three[1].count);
    CHECK_THROWS_AS(gate_count_table(4), std::invalid_argument);
}

TEST_CASE("circuit json round trip") {
    CounterRng rng(71, 0);
    QuantumCircuit c;
    c.t = 3;
    c.gates = {ControlledSingle{2, 3, random_unitary(2, rng)}, WireCnot{1, 2},
               ControlledSingle{1, 3, random_unitary(2, rng)}};
    const QuantumCircuit back = circuit_from_json(circuit_to_json(c));
    CHECK(back.t == c.t);
    REQUIRE(back.gates.size() == c.gates.size());
    CHECK((simulate(back).m - simulate(c).m).max_norm() < 1e-13);
    CHECK_THROWS(circuit_from_json("{\"t\": 2, \"gates\": [{\"kind\": \"bogus\"}]}"));
}
