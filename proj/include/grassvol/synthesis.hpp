#pragma once

#include <string>
#include <variant>
#include <vector>

#include "grassvol/complexmat.hpp"
#include "grassvol/gates.hpp"

namespace grassvol {

/// Single-controlled 2 x 2 unitary: applies u to the target iff the control
/// bit is 1.
struct ControlledSingle {
    unsigned control = 1;
    unsigned target = 2;
    ComplexMatrix u;
};

struct WireCnot {
    unsigned control = 1;
    unsigned target = 2;
};

using CircuitGate = std::variant<ControlledSingle, WireCnot>;

/// Ordered list of gates on t wires; list order is temporal (the first gate
/// acts first).
struct QuantumCircuit {
    unsigned t = 2;
    std::vector<CircuitGate> gates;
};

struct SynthesisReport {
    QuantumCircuit circuit;
    GateMatrix reference;  // the direct controlled-U matrix
    double max_error = 0.0;
    std::size_t gate_count = 0;
};

struct GateCountRow {
    unsigned controls;
    std::size_t count;
};

/// Exhaustive checks of the mod-2 exponent identities over Z_2^2 / Z_2^3.
bool mod2_identity_check(unsigned order);

/// Principal root of a 2 x 2 unitary: eigenphases taken in (-pi, pi],
/// each mapped to exp(i theta / degree). V^degree = u.
ComplexMatrix unitary_root(const ComplexMatrix& u, unsigned degree);

/// Left-to-right product of gate embeddings into 2^t dimensions.
GateMatrix simulate(const QuantumCircuit& c);

/// Direct C^(controls)-U matrix: identity except u in the all-controls-on
/// target block. Wires 1..controls control, wire controls+1 is the target.
GateMatrix direct_controlled(const ComplexMatrix& u, unsigned controls);

/// Five-gate C^2-U circuit from a square root of u.
SynthesisReport synthesize_ccu(const ComplexMatrix& u);

/// Seventeen-gate C^3-U circuit from a fourth root of u.
SynthesisReport synthesize_cccu(const ComplexMatrix& u);

std::vector<GateCountRow> gate_count_table(unsigned max_controls);

/// Circuit JSON: {"t": t, "gates": [{"kind": "cu"|"cnot", "control", "target", "u"?}]}.
std::string circuit_to_json(const QuantumCircuit& c);
QuantumCircuit circuit_from_json(const std::string& text);

}  // namespace grassvol
