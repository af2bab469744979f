#include "grassvol/gates.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace grassvol {

namespace {

void check_wires(unsigned t) {
    if (t < 1) throw std::invalid_argument("qubit count must be >= 1");
    if (t > kMaxQubits) throw std::invalid_argument("qubit count above configured cap");
}

}  // namespace

BasisIndex::BasisIndex(unsigned t_, std::uint64_t i_) : t(t_), i(i_) {
    check_wires(t);
    if (i >= (std::uint64_t{1} << t))
        throw std::invalid_argument("basis index out of range");
}

ComplexMatrix pauli_x() {
    return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
}

ComplexMatrix pauli_y() {
    return ComplexMatrix::from_rows({{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}});
}

ComplexMatrix pauli_z() {
    return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
}

ComplexMatrix walsh() {
    const double s = 1.0 / std::sqrt(2.0);
    return ComplexMatrix::from_rows({{s, s}, {s, -s}});
}

GateMatrix walsh_power(unsigned t) {
    check_wires(t);
    // Entrywise n^{-1/2} (-1)^{i.j} rather than repeated kron: for even t the
    // entries (powers of 1/2) then come out exact.
    const std::uint64_t n = std::uint64_t{1} << t;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    ComplexMatrix m(n, n);
    for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = 0; j < n; ++j)
            m(i, j) = (std::popcount(i & j) & 1) ? -scale : scale;
    return GateMatrix{t, std::move(m)};
}

double row_sum(const BasisIndex& i) {
    const GateMatrix w = walsh_power(i.t);
    cplx s{0.0, 0.0};
    for (std::uint64_t j = 0; j < i.dimension(); ++j) s += w.m(i.i, j);
    return s.real();
}

int character(const BasisIndex& i, const BasisIndex& j) {
    if (i.t != j.t) throw std::invalid_argument("character: qubit count mismatch");
    return (std::popcount(i.i & j.i) & 1) ? -1 : 1;
}

GateMatrix cnot(unsigned t, unsigned control, unsigned target) {
    check_wires(t);
    if (control == target || control < 1 || control > t || target < 1 || target > t)
        throw std::invalid_argument("cnot: invalid wires");
    const std::uint64_t n = std::uint64_t{1} << t;
    const std::uint64_t cmask = std::uint64_t{1} << (t - control);
    const std::uint64_t tmask = std::uint64_t{1} << (t - target);
    ComplexMatrix m(n, n);
    for (std::uint64_t a = 0; a < n; ++a) {
        const std::uint64_t image = (a & cmask) ? (a ^ tmask) : a;
        m(image, a) = 1.0;
    }
    return GateMatrix{t, std::move(m)};
}

CnotUnitonDecomposition cnot_uniton_decomposition() {
    const GateMatrix cn = cnot(2, 1, 2);
    // C-NOT = 1_4 - 2P, so P = (1_4 - C-NOT)/2.
    const ComplexMatrix p = (ComplexMatrix::identity(4) - cn.m) * cplx{0.5, 0.0};
    const ComplexMatrix d =
        kron(ComplexMatrix::identity(2), walsh()) * kron(pauli_x(), pauli_x());
    return CnotUnitonDecomposition{GrassmannPoint{4, 1, p}, GateMatrix{2, d}};
}

GateMatrix repeated_cnot(unsigned t) {
    check_wires(t);
    if (t < 2) throw std::invalid_argument("repeated_cnot: t must be >= 2");
    const std::uint64_t n = std::uint64_t{1} << t;
    ComplexMatrix m = ComplexMatrix::identity(n);
    m(n - 2, n - 2) = 0.0;
    m(n - 1, n - 1) = 0.0;
    m(n - 2, n - 1) = 1.0;
    m(n - 1, n - 2) = 1.0;
    return GateMatrix{t, std::move(m)};
}

GateMatrix f_matrix(unsigned t, std::uint64_t k) {
    check_wires(t);
    const std::uint64_t n = std::uint64_t{1} << t;
    if (k < 1 || k > n) throw std::invalid_argument("f_matrix: k out of range");
    ComplexMatrix m = ComplexMatrix::identity(n);
    for (std::uint64_t i = 0; i < k; ++i) m(i, i) = -1.0;
    return GateMatrix{t, std::move(m)};
}

GateMatrix flip_conjugator(const BasisIndex& i) {
    const std::uint64_t n = i.dimension();
    ComplexMatrix m(n, n);
    for (std::uint64_t a = 0; a < n; ++a) m(a ^ i.i, a) = 1.0;  // U_i|a) = |a xor i)
    return GateMatrix{i.t, std::move(m)};
}

double f_recursion_error(unsigned t) {
    check_wires(t);
    const std::uint64_t n = std::uint64_t{1} << t;
    const GateMatrix f1 = f_matrix(t, 1);
    double worst = 0.0;
    for (std::uint64_t k = 1; k <= n - 1; ++k) {
        const GateMatrix uk = flip_conjugator(BasisIndex(t, k));
        const ComplexMatrix step = f_matrix(t, k).m * (uk.m * f1.m * uk.m);
        const ComplexMatrix expected =
            (k == n - 1) ? -ComplexMatrix::identity(n) : f_matrix(t, k + 1).m;
        worst = std::max(worst, (step - expected).max_norm());
    }
    return worst;
}

bool f_recursion_check(unsigned t, double tol) {
    return f_recursion_error(t) <= tol;
}

GroverReflections grover_reflections(const BasisIndex& i) {
    const GateMatrix ui = flip_conjugator(i);
    const GateMatrix f1 = f_matrix(i.t, 1);
    const GateMatrix w = walsh_power(i.t);
    return GroverReflections{GateMatrix{i.t, ui.m * f1.m * ui.m},
                             GateMatrix{i.t, w.m * f1.m * w.m}};
}

GateMatrix f1_from_repeated_cnot(unsigned t) {
    check_wires(t);
    if (t < 2) throw std::invalid_argument("f1_from_repeated_cnot: t must be >= 2");
    ComplexMatrix xs = pauli_x();
    for (unsigned k = 2; k < t; ++k) xs = kron(xs, pauli_x());  // X^{ot(t-1)}
    const ComplexMatrix left = kron(xs, pauli_x() * walsh());
    const ComplexMatrix right = kron(xs, walsh() * pauli_x());
    return GateMatrix{t, left * repeated_cnot(t).m * right};
}

GateMatrix uniton_product(unsigned t, const std::vector<GrassmannPoint>& ps) {
    check_wires(t);
    const std::uint64_t n = std::uint64_t{1} << t;
    ComplexMatrix u = ComplexMatrix::identity(n);
    for (const auto& p : ps) {
        if (p.n != n) throw std::invalid_argument("uniton_product: dimension mismatch");
        u = u * (ComplexMatrix::identity(n) - p.p * cplx{2.0, 0.0});
    }
    return GateMatrix{t, std::move(u)};
}

}  // namespace grassvol
