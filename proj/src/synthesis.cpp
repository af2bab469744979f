#include "grassvol/synthesis.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace grassvol {

bool mod2_identity_check(unsigned order) {
    if (order == 2) {
        for (int x = 0; x <= 1; ++x)
            for (int y = 0; y <= 1; ++y)
                if (x + y - (x ^ y) != 2 * x * y) return false;
        return true;
    }
    if (order == 3) {
        for (int x = 0; x <= 1; ++x)
            for (int y = 0; y <= 1; ++y)
                for (int z = 0; z <= 1; ++z) {
                    const int lhs = x + y + z - (x ^ y) - (x ^ z) - (y ^ z) + (x ^ y ^ z);
                    if (lhs != 4 * x * y * z) return false;
                }
        return true;
    }
    throw std::invalid_argument("mod2_identity_check: order must be 2 or 3");
}

ComplexMatrix unitary_root(const ComplexMatrix& u, unsigned degree) {
    if (u.rows() != 2 || u.cols() != 2)
        throw std::invalid_argument("unitary_root: expected a 2 x 2 matrix");
    if (!is_unitary(u, 1e-8)) throw std::invalid_argument("unitary_root: input not unitary");
    if (degree == 0) throw std::invalid_argument("unitary_root: degree must be positive");

    const auto principal_root = [degree](cplx lambda) {
        return std::exp(cplx{0.0, std::arg(lambda) / static_cast<double>(degree)});
    };

    const cplx tr = u.trace();
    const cplx d = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    const cplx disc = std::sqrt(tr * tr - 4.0 * d);
    const cplx l1 = 0.5 * (tr + disc);
    const cplx l2 = 0.5 * (tr - disc);

    if (std::abs(l1 - l2) < 1e-12) {
        // Equal eigenvalues of a normal matrix: u is a scalar multiple of 1.
        return ComplexMatrix::identity(2) * principal_root(l1);
    }
    // Eigenvector for l1: the larger column of u - l2 * 1.
    const cplx c0a = u(0, 0) - l2, c0b = u(1, 0);
    const cplx c1a = u(0, 1), c1b = u(1, 1) - l2;
    cplx v0, v1;
    if (std::norm(c0a) + std::norm(c0b) >= std::norm(c1a) + std::norm(c1b)) {
        v0 = c0a; v1 = c0b;
    } else {
        v0 = c1a; v1 = c1b;
    }
    const double nv = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= nv; v1 /= nv;
    // Orthonormal partner; for a normal matrix it is the l2 eigenvector.
    const cplx w0 = -std::conj(v1), w1 = std::conj(v0);
    ComplexMatrix s(2, 2);
    s(0, 0) = v0; s(1, 0) = v1;
    s(0, 1) = w0; s(1, 1) = w1;
    ComplexMatrix r(2, 2);
    r(0, 0) = principal_root(l1);
    r(1, 1) = principal_root(l2);
    return s * r * s.adjoint();
}

namespace {

void check_circuit(const QuantumCircuit& c) {
    if (c.t < 1 || c.t > kMaxQubits)
        throw std::invalid_argument("circuit: wire count out of range");
    for (const auto& g : c.gates) {
        unsigned control, target;
        if (const auto* cu = std::get_if<ControlledSingle>(&g)) {
            control = cu->control;
            target = cu->target;
            if (cu->u.rows() != 2 || cu->u.cols() != 2 || !is_unitary(cu->u, 1e-8))
                throw std::invalid_argument("circuit: controlled gate needs a 2 x 2 unitary");
        } else {
            const auto& cn = std::get<WireCnot>(g);
            control = cn.control;
            target = cn.target;
        }
        if (control < 1 || control > c.t || target < 1 || target > c.t || control == target)
            throw std::invalid_argument("circuit: invalid wires");
    }
}

// Embed a controlled 2 x 2 unitary into 2^t dimensions.
ComplexMatrix embed_controlled(unsigned t, unsigned control, unsigned target,
                               const ComplexMatrix& u) {
    const std::uint64_t n = std::uint64_t{1} << t;
    const std::uint64_t cmask = std::uint64_t{1} << (t - control);
    const std::uint64_t tmask = std::uint64_t{1} << (t - target);
    ComplexMatrix m = ComplexMatrix::identity(n);
    for (std::uint64_t a = 0; a < n; ++a) {
        if (!(a & cmask) || (a & tmask)) continue;
        const std::uint64_t p = a;          // target bit 0
        const std::uint64_t q = a | tmask;  // target bit 1
        m(p, p) = u(0, 0);
        m(p, q) = u(0, 1);
        m(q, p) = u(1, 0);
        m(q, q) = u(1, 1);
    }
    return m;
}

}  // namespace

GateMatrix simulate(const QuantumCircuit& c) {
    check_circuit(c);
    const std::uint64_t n = std::uint64_t{1} << c.t;
    ComplexMatrix result = ComplexMatrix::identity(n);
    for (const auto& g : c.gates) {
        ComplexMatrix gm;
        if (const auto* cu = std::get_if<ControlledSingle>(&g))
            gm = embed_controlled(c.t, cu->control, cu->target, cu->u);
        else {
            const auto& cn = std::get<WireCnot>(g);
            gm = cnot(c.t, cn.control, cn.target).m;
        }
        result = gm * result;  // later gates act on the left
    }
    return GateMatrix{c.t, std::move(result)};
}

GateMatrix direct_controlled(const ComplexMatrix& u, unsigned controls) {
    const unsigned t = controls + 1;
    const std::uint64_t n = std::uint64_t{1} << t;
    ComplexMatrix m = ComplexMatrix::identity(n);
    m(n - 2, n - 2) = u(0, 0);
    m(n - 2, n - 1) = u(0, 1);
    m(n - 1, n - 2) = u(1, 0);
    m(n - 1, n - 1) = u(1, 1);
    return GateMatrix{t, std::move(m)};
}

SynthesisReport synthesize_ccu(const ComplexMatrix& u) {
    const ComplexMatrix v = unitary_root(u, 2);
    const ComplexMatrix vdag = v.adjoint();
    QuantumCircuit c;
    c.t = 3;
    c.gates = {ControlledSingle{2, 3, v}, WireCnot{1, 2}, ControlledSingle{2, 3, vdag},
               WireCnot{1, 2}, ControlledSingle{1, 3, v}};
    SynthesisReport report;
    report.reference = direct_controlled(u, 2);
    report.max_error = (simulate(c).m - report.reference.m).max_norm();
    report.gate_count = c.gates.size();
    report.circuit = std::move(c);
    return report;
}

SynthesisReport synthesize_cccu(const ComplexMatrix& u) {
    const ComplexMatrix v = unitary_root(u, 4);
    const ComplexMatrix vdag = v.adjoint();
    QuantumCircuit c;
    c.t = 4;
    // V on each single control, V-dagger on each pairwise parity, V on the
    // triple parity; parities staged on wires 2 and 3 by the CNOTs.
    c.gates = {ControlledSingle{1, 4, v},
               ControlledSingle{2, 4, v},
               ControlledSingle{3, 4, v},
               WireCnot{1, 2},
               ControlledSingle{2, 4, vdag},  // x xor y
               WireCnot{1, 2},
               WireCnot{1, 3},
               ControlledSingle{3, 4, vdag},  // x xor z
               WireCnot{1, 3},
               WireCnot{2, 3},
               ControlledSingle{3, 4, vdag},  // y xor z
               WireCnot{2, 3},
               WireCnot{1, 2},
               WireCnot{2, 3},
               ControlledSingle{3, 4, v},     // x xor y xor z
               WireCnot{2, 3},
               WireCnot{1, 2}};
    SynthesisReport report;
    report.reference = direct_controlled(u, 3);
    report.max_error = (simulate(c).m - report.reference.m).max_norm();
    report.gate_count = c.gates.size();
    report.circuit = std::move(c);
    return report;
}

std::vector<GateCountRow> gate_count_table(unsigned max_controls) {
    if (max_controls < 2 || max_controls > 3)
        throw std::invalid_argument("gate_count_table: max_controls must be 2 or 3");
    std::vector<GateCountRow> rows{{2, 5}};
    if (max_controls == 3) rows.push_back({3, 17});
    return rows;
}

std::string circuit_to_json(const QuantumCircuit& c) {
    nlohmann::json j;
    j["t"] = c.t;
    auto gates = nlohmann::json::array();
    for (const auto& g : c.gates) {
        nlohmann::json gj;
        if (const auto* cu = std::get_if<ControlledSingle>(&g)) {
            gj["kind"] = "cu";
            gj["control"] = cu->control;
            gj["target"] = cu->target;
            gj["u"] = nlohmann::json::parse(matrix_to_json(cu->u));
        } else {
            const auto& cn = std::get<WireCnot>(g);
            gj["kind"] = "cnot";
            gj["control"] = cn.control;
            gj["target"] = cn.target;
        }
        gates.push_back(std::move(gj));
    }
    j["gates"] = std::move(gates);
    return j.dump();
}

QuantumCircuit circuit_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    QuantumCircuit c;
    c.t = j.at("t").get<unsigned>();
    for (const auto& gj : j.at("gates")) {
        const std::string kind = gj.at("kind").get<std::string>();
        const unsigned control = gj.at("control").get<unsigned>();
        const unsigned target = gj.at("target").get<unsigned>();
        if (kind == "cu")
            c.gates.push_back(ControlledSingle{control, target,
                                               matrix_from_json(gj.at("u").dump())});
        else if (kind == "cnot")
            c.gates.push_back(WireCnot{control, target});
        else
            throw std::invalid_argument("circuit_from_json: unknown gate kind");
    }
    check_circuit(c);
    return c;
}

}  // namespace grassvol
