#pragma once

#include <cstdint>
#include <vector>

#include "grassvol/complexmat.hpp"
#include "grassvol/grassmann.hpp"

namespace grassvol {

/// Computational-basis index on t qubit wires. Wire 1 is the most
/// significant bit: i = i_1 2^{t-1} + ... + i_t.
struct BasisIndex {
    unsigned t = 1;
    std::uint64_t i = 0;

    BasisIndex(unsigned t_, std::uint64_t i_);
    /// Bit on wire k (1-based, wire 1 = MSB).
    unsigned bit(unsigned k) const { return static_cast<unsigned>((i >> (t - k)) & 1u); }
    std::uint64_t dimension() const { return std::uint64_t{1} << t; }
};

/// A unitary acting on t qubit wires (dimension 2^t).
struct GateMatrix {
    unsigned t = 1;
    ComplexMatrix m;
};

/// Dense matrices above this wire count are refused (1024 x 1024 default cap).
constexpr unsigned kMaxQubits = 10;

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
/// The 2 x 2 Walsh-Hadamard matrix.
ComplexMatrix walsh();

/// W^{ot t}: entry (i, j) = 2^{-t/2} (-1)^{i . j} with i . j the bitwise dot.
GateMatrix walsh_power(unsigned t);

/// Row sum of W^{ot t}: sqrt(n) when i = 0, else 0.
double row_sum(const BasisIndex& i);

/// chi_i(j) = (-1)^{i . j}, a character of Z_2^t under XOR.
int character(const BasisIndex& i, const BasisIndex& j);

/// Controlled NOT with arbitrary control/target wires (exact permutation).
GateMatrix cnot(unsigned t, unsigned control, unsigned target);

struct CnotUnitonDecomposition {
    GrassmannPoint p;            // rank-1 projection with C-NOT = 1 - 2P
    GateMatrix diagonalizer;     // D with P = D E_1 D^{-1}
};

/// The t = 2 C-NOT written as a uniton, with its Walsh-Hadamard diagonalizer.
CnotUnitonDecomposition cnot_uniton_decomposition();

/// C^{(t-1)}-NOT: identity with the bottom-right 2 x 2 block replaced by X.
GateMatrix repeated_cnot(unsigned t);

/// F_k = 1_n - 2 E_k = diag(-1_k, 1_{n-k}) on n = 2^t.
GateMatrix f_matrix(unsigned t, std::uint64_t k);

/// U_i = X^{i_1} ot ... ot X^{i_t}; self-inverse, sends |0) to |i).
GateMatrix flip_conjugator(const BasisIndex& i);

/// Verifies F_k (U_k F_1 U_k) = F_{k+1} for 1 <= k <= n-1 and
/// F_{n-1}(U_{n-1} F_1 U_{n-1}) = -1_n. Returns the largest deviation.
double f_recursion_error(unsigned t);
bool f_recursion_check(unsigned t, double tol = 1e-12);

struct GroverReflections {
    GateMatrix marked;     // 1_n - 2|i)(i|
    GateMatrix diffusion;  // 1_n - 2|s)(s| = W^{ot t} F_1 W^{ot t}
};

GroverReflections grover_reflections(const BasisIndex& i);

/// F_1 rebuilt from C^{(t-1)}-NOT conjugated by (X^{ot(t-1)} ot XW) and
/// (X^{ot(t-1)} ot WX).
GateMatrix f1_from_repeated_cnot(unsigned t);

/// prod (1_n - 2 P_j) over the given projections; the empty product is 1_n.
/// All projections must share the ambient dimension n = 2^t.
GateMatrix uniton_product(unsigned t, const std::vector<GrassmannPoint>& ps);

}  // namespace grassvol
