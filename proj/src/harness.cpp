#include "grassvol/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "grassvol/flag.hpp"
#include "grassvol/gates.hpp"
#include "grassvol/grassmann.hpp"
#include "grassvol/holonomy.hpp"
#include "grassvol/pauli.hpp"
#include "grassvol/synthesis.hpp"

namespace grassvol {

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, CounterRng& rng) {
    ComplexMatrix m(rows, cols);
    for (auto& e : m.data())
        e = cplx{2.0 * rng.next_open01() - 1.0, 2.0 * rng.next_open01() - 1.0};
    return m;
}

ComplexMatrix random_hermitian(std::size_t n, CounterRng& rng) {
    const ComplexMatrix g = random_matrix(n, n, rng);
    return (g + g.adjoint()) * cplx{0.5, 0.0};
}

ComplexMatrix random_unitary(std::size_t n, CounterRng& rng) {
    return unitary_exp(random_hermitian(n, rng), 1.0);
}

namespace {

struct CheckOutcome {
    bool pass = false;
    double max_error = 0.0;
};

struct Check {
    std::string id;
    std::string anchor;
    bool seeded;
    std::function<CheckOutcome(const HarnessConfig&)> run;
};

CheckOutcome judge(double err, double tol) { return {err <= tol, err}; }

// ---- grassmann ----

CheckOutcome mc_check(unsigned k, unsigned n, const HarnessConfig& c) {
    const VolumeEstimate est = mc_volume(k, n, c.mc_samples, c.seed, c.workers);
    const double target = grassmann_volume(k, n);
    const double rel = std::abs(est.mean - target) / target;
    const bool pass =
        std::abs(est.mean - target) <= 3.0 * est.standard_error && rel <= 0.01;
    return {pass, rel};
}

CheckOutcome quadrature_check(const HarnessConfig&) {
    double worst = 0.0;
    for (unsigned n = 2; n <= 6; ++n) {
        const double target = grassmann_volume(1, n);
        worst = std::max(worst,
                         std::abs(projective_volume_quadrature(n, 64) - target) / target);
    }
    return judge(worst, 1e-8);
}

CheckOutcome sphere_product_check(const HarnessConfig&) {
    double worst = 0.0;
    for (unsigned n = 1; n <= 8; ++n) {
        double prod = 1.0;
        for (unsigned k = 1; k <= n; ++k) prod *= sphere_volume(k);
        worst = std::max(worst, std::abs(unitary_volume(n) - prod));
    }
    return {worst == 0.0, worst};
}

CheckOutcome volume_symmetry_check(const HarnessConfig&) {
    double worst = 0.0;
    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned k = 0; k <= n; ++k)
            worst = std::max(worst,
                             std::abs(grassmann_volume(k, n) - grassmann_volume(n - k, n)));
    return {worst == 0.0, worst};
}

CheckOutcome chart_check(const HarnessConfig& c) {
    CounterRng rng(c.seed, 101);
    double worst = 0.0;
    const std::size_t cases[][2] = {{2, 1}, {3, 1}, {3, 2}, {4, 2}, {5, 3}};
    for (const auto& kn : cases) {
        const std::size_t n = kn[0], k = kn[1];
        OikeChart chart{n, k, random_unitary(n, rng), random_matrix(n - k, k, rng)};
        const GrassmannPoint p = chart_point(chart);
        if (!p.valid()) return {false, 1e300};
        worst = std::max(worst, (p.p * p.p - p.p).max_norm());
        // Z = 0 pins the base point of the chart.
        chart.z = ComplexMatrix::zero(n - k, k);
        const ComplexMatrix expected =
            chart.base * special_projection(k, n) * chart.base.adjoint();
        worst = std::max(worst, (chart_point(chart).p - expected).max_norm());
    }
    return judge(worst, 1e-10);
}

// ---- flag ----

CheckOutcome kernel_classify_check(const HarnessConfig& c) {
    CounterRng rng(c.seed, 201);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.next_u64() % 4);
        const ComplexMatrix u = random_unitary(n, rng);
        ComplexMatrix d(n, n);
        SpectralType expected;
        for (std::size_t j = 0; j < n; ++j)
            d(j, j) = static_cast<double>(static_cast<long long>(rng.next_u64() % 7) - 3);
        const ComplexMatrix x = u * d * u.adjoint();
        if (!in_kernel(x)) return {false, 1e300};
        const SpectralDecomposition dec = spectral_decompose(x);
        ComplexMatrix sum(n, n);
        ComplexMatrix recon(n, n);
        for (std::size_t a = 0; a < dec.projections.size(); ++a) {
            const auto& pa = dec.projections[a];
            sum = sum + pa.p;
            recon = recon + pa.p * cplx{static_cast<double>(
                                            dec.spectral_type.pairs[a].eigenvalue),
                                        0.0};
            worst = std::max(worst, (pa.p * pa.p - pa.p).max_norm());
            for (std::size_t b = a + 1; b < dec.projections.size(); ++b)
                worst = std::max(worst, (pa.p * dec.projections[b].p).max_norm());
        }
        worst = std::max(worst, (sum - ComplexMatrix::identity(n)).max_norm());
        worst = std::max(worst, (recon - x).max_norm());
    }
    return judge(worst, 1e-9);
}

CheckOutcome kernel_reject_check(const HarnessConfig& c) {
    CounterRng rng(c.seed, 202);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.next_u64() % 3);
        ComplexMatrix d(n, n);
        for (std::size_t j = 0; j < n; ++j)
            d(j, j) = static_cast<double>(rng.next_u64() % 3) + 0.37;  // off-integer
        const ComplexMatrix u = random_unitary(n, rng);
        const ComplexMatrix x = u * d * u.adjoint();
        if (in_kernel(x)) return {false, 1.0};
        try {
            spectral_type(x);
            return {false, 1.0};  // should have thrown
        } catch (const std::invalid_argument&) {
        }
    }
    return {true, 0.0};
}

CheckOutcome flag_descriptor_check(const HarnessConfig&) {
    const SpectralType distinct{{{-1, 1}, {0, 1}, {2, 1}}};
    const FlagDescriptor full = flag_descriptor(distinct);
    if (full.quotient != std::vector<std::size_t>{1, 1, 1} || full.complex_dimension != 3)
        return {false, 1.0};
    // Two-block types reduce to Grassmannians, including their volume.
    double worst = 0.0;
    for (unsigned n = 2; n <= 6; ++n)
        for (unsigned k = 1; k < n; ++k) {
            const SpectralType two{{{0, n - k}, {1, k}}};
            const FlagDescriptor d = flag_descriptor(two);
            if (d.complex_dimension != static_cast<std::size_t>(k) * (n - k))
                return {false, 1.0};
            const double gv = grassmann_volume(k, n);
            worst = std::max(worst, std::abs(flag_volume(two) - gv) / gv);
        }
    return judge(worst, 1e-12);
}

// ---- gates ----

CheckOutcome walsh_t2_check(const HarnessConfig&) {
    ComplexMatrix expected(4, 4);
    const double signs[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) expected(i, j) = 0.5 * signs[i][j];
    const double err = (walsh_power(2).m - expected).max_norm();
    return {err == 0.0, err};
}

CheckOutcome walsh_t3_check(const HarnessConfig&) {
    const double s = 1.0 / std::sqrt(8.0);
    ComplexMatrix expected(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            expected(i, j) = (std::popcount(static_cast<unsigned>(i & j)) & 1) ? -s : s;
    const double err = (walsh_power(3).m - expected).max_norm();
    return {err == 0.0, err};
}

CheckOutcome walsh_involution_check(const HarnessConfig&) {
    double worst = 0.0;
    for (unsigned t = 1; t <= 6; ++t) {
        const GateMatrix w = walsh_power(t);
        const std::uint64_t n = std::uint64_t{1} << t;
        worst = std::max(worst, (w.m * w.m - ComplexMatrix::identity(n)).max_norm());
    }
    return judge(worst, 1e-11);
}

CheckOutcome rowsum_check(const HarnessConfig&) {
    double worst = 0.0;
    for (unsigned t = 1; t <= 4; ++t) {
        const std::uint64_t n = std::uint64_t{1} << t;
        for (std::uint64_t i = 0; i < n; ++i) {
            const double expected = (i == 0) ? std::sqrt(static_cast<double>(n)) : 0.0;
            worst = std::max(worst, std::abs(row_sum(BasisIndex(t, i)) - expected));
        }
    }
    return judge(worst, 1e-12);
}

CheckOutcome character_check(const HarnessConfig&) {
    for (std::uint64_t i = 0; i < 16; ++i)
        for (std::uint64_t j = 0; j < 16; ++j)
            for (std::uint64_t k = 0; k < 16; ++k) {
                const BasisIndex bi(4, i);
                if (character(bi, BasisIndex(4, j ^ k)) !=
                    character(bi, BasisIndex(4, j)) * character(bi, BasisIndex(4, k)))
                    return {false, 1.0};
            }
    return {true, 0.0};
}

CheckOutcome cnot_matrices_check(const HarnessConfig&) {
    const ComplexMatrix forward = ComplexMatrix::from_rows({{1, 0, 0, 0},
                                                            {0, 1, 0, 0},
                                                            {0, 0, 0, 1},
                                                            {0, 0, 1, 0}});
    const ComplexMatrix backward = ComplexMatrix::from_rows({{1, 0, 0, 0},
                                                             {0, 0, 0, 1},
                                                             {0, 0, 1, 0},
                                                             {0, 1, 0, 0}});
    const double err = std::max((cnot(2, 1, 2).m - forward).max_norm(),
                                (cnot(2, 2, 1).m - backward).max_norm());
    return {err == 0.0, err};
}

CheckOutcome cnot_uniton_check(const HarnessConfig&) {
    const CnotUnitonDecomposition dec = cnot_uniton_decomposition();
    double worst = (cnot(2, 1, 2).m -
                    (ComplexMatrix::identity(4) - dec.p.p * cplx{2.0, 0.0}))
                       .max_norm();
    worst = std::max(worst, (dec.p.p * dec.p.p - dec.p.p).max_norm());
    worst = std::max(worst, std::abs(dec.p.p.trace() - cplx{1.0, 0.0}));
    const ComplexMatrix conj = dec.diagonalizer.m * special_projection(1, 4) *
                               dec.diagonalizer.m.adjoint();
    worst = std::max(worst, (conj - dec.p.p).max_norm());
    return judge(worst, 1e-12);
}

CheckOutcome repeated_cnot_reflection_check(const HarnessConfig&) {
    double worst = 0.0;
    for (unsigned t = 2; t <= 4; ++t) {
        const std::uint64_t n = std::uint64_t{1} << t;
        ComplexMatrix conj = ComplexMatrix::identity(n / 2);
        conj = kron(conj, walsh());
        const ComplexMatrix got = conj * repeated_cnot(t).m * conj;
        ComplexMatrix expected = ComplexMatrix::identity(n);
        expected(n - 1, n - 1) = -1.0;
        worst = std::max(worst, (got - expected).max_norm());
    }
    return judge(worst, 1e-12);
}

CheckOutcome flip_reflection_check(const HarnessConfig&) {
    double worst = 0.0;
    for (unsigned t = 2; t <= 4; ++t) {
        const std::uint64_t n = std::uint64_t{1} << t;
        const GateMatrix f1 = f_matrix(t, 1);
        for (std::uint64_t i = 0; i < n; ++i) {
            const GateMatrix ui = flip_conjugator(BasisIndex(t, i));
            ComplexMatrix expected = ComplexMatrix::identity(n);
            expected(i, i) = -1.0;
            worst = std::max(worst, (ui.m * f1.m * ui.m - expected).max_norm());
        }
    }
    return judge(worst, 1e-12);
}

CheckOutcome f_recursion_harness_check(const HarnessConfig&) {
    double worst = 0.0;
    for (unsigned t = 2; t <= 4; ++t) worst = std::max(worst, f_recursion_error(t));
    return judge(worst, 1e-12);
}

CheckOutcome grover_check(const HarnessConfig&) {
    double worst = 0.0;
    const unsigned t = 3;
    const std::uint64_t n = 8;
    for (std::uint64_t i = 0; i < n; ++i) {
        const GroverReflections refl = grover_reflections(BasisIndex(t, i));
        ComplexMatrix marked = ComplexMatrix::identity(n);
        marked(i, i) = -1.0;
        worst = std::max(worst, (refl.marked.m - marked).max_norm());
        // diffusion = 1 - 2|s)(s| with |s) uniform
        ComplexMatrix diffusion(n, n);
        for (std::uint64_t a = 0; a < n; ++a)
            for (std::uint64_t b = 0; b < n; ++b)
                diffusion(a, b) = ((a == b) ? 1.0 : 0.0) - 2.0 / static_cast<double>(n);
        worst = std::max(worst, (refl.diffusion.m - diffusion).max_norm());
    }
    return judge(worst, 1e-12);
}

CheckOutcome f1_rebuild_check(const HarnessConfig&) {
    double worst = 0.0;
    for (unsigned t = 2; t <= 4; ++t)
        worst = std::max(worst, (f1_from_repeated_cnot(t).m - f_matrix(t, 1).m).max_norm());
    return judge(worst, 1e-11);
}

// ---- pauli ----

ComplexMatrix matpow(const ComplexMatrix& m, unsigned p) {
    ComplexMatrix out = ComplexMatrix::identity(m.rows());
    for (unsigned i = 0; i < p; ++i) out = out * m;
    return out;
}

CheckOutcome weyl_commutation_check(const HarnessConfig&) {
    double worst = 0.0;
    for (std::size_t n = 2; n <= 8; ++n) {
        const ClockShiftPair cs = clock_shift(n);
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b) {
                const cplx phase =
                    std::polar(1.0, 2.0 * M_PI * static_cast<double>((a * b) % n) /
                                        static_cast<double>(n));
                const ComplexMatrix lhs = matpow(cs.clock, a) * matpow(cs.shift, b);
                const ComplexMatrix rhs =
                    phase * (matpow(cs.shift, b) * matpow(cs.clock, a));
                worst = std::max(worst, (lhs - rhs).max_norm());
            }
    }
    return judge(worst, 1e-12);
}

CheckOutcome pauli_diagonalize_check(const HarnessConfig&) {
    double worst = 0.0;
    for (std::size_t n = 2; n <= 12; ++n) {
        worst = std::max(worst, diagonalize_shift_error(n));
        const ComplexMatrix w = vandermonde_w(n);
        worst = std::max(
            worst, (w.adjoint() * w - ComplexMatrix::identity(n)).max_norm());
    }
    return judge(worst, 1e-12);
}

CheckOutcome pauli_worked_example_check(const HarnessConfig&) {
    const cplx sigma = std::polar(1.0, 2.0 * M_PI / 3.0);
    const cplx sigma2 = std::polar(1.0, 4.0 * M_PI / 3.0);
    const double s = 1.0 / std::sqrt(3.0);
    ComplexMatrix expected = ComplexMatrix::from_rows(
        {{1.0, 1.0, 1.0}, {1.0, sigma2, sigma}, {1.0, sigma, sigma2}});
    expected = expected * cplx{s, 0.0};
    double worst = (vandermonde_w(3) - expected).max_norm();
    // n = 2 reduces to the Walsh-Hadamard matrix.
    worst = std::max(worst, (vandermonde_w(2) - walsh()).max_norm());
    return judge(worst, 1e-12);
}

// ---- synth ----

CheckOutcome mod2_check(const HarnessConfig&) {
    return {mod2_identity_check(2) && mod2_identity_check(3), 0.0};
}

CheckOutcome root_check(const HarnessConfig& c) {
    CounterRng rng(c.seed, 501);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix u = random_unitary(2, rng);
        for (unsigned d : {2u, 4u}) {
            const ComplexMatrix v = unitary_root(u, d);
            ComplexMatrix vp = ComplexMatrix::identity(2);
            for (unsigned i = 0; i < d; ++i) vp = vp * v;
            worst = std::max(worst, (vp - u).max_norm());
        }
    }
    return judge(worst, 1e-11);
}

CheckOutcome ccu_check(const HarnessConfig& c) {
    CounterRng rng(c.seed, 502);
    double worst = synthesize_ccu(pauli_x()).max_error;
    for (int trial = 0; trial < 50; ++trial)
        worst = std::max(worst, synthesize_ccu(random_unitary(2, rng)).max_error);
    return judge(worst, 1e-10);
}

CheckOutcome cccu_check(const HarnessConfig& c) {
    CounterRng rng(c.seed, 503);
    double worst = synthesize_cccu(pauli_x()).max_error;
    for (int trial = 0; trial < 50; ++trial)
        worst = std::max(worst, synthesize_cccu(random_unitary(2, rng)).max_error);
    return judge(worst, 1e-9);
}

CheckOutcome gate_count_check(const HarnessConfig&) {
    const auto rows = gate_count_table(3);
    const bool ok = rows.size() == 2 && rows[0].controls == 2 && rows[0].count == 5 &&
                    rows[1].controls == 3 && rows[1].count == 17 &&
                    synthesize_ccu(pauli_x()).gate_count == 5 &&
                    synthesize_cccu(pauli_x()).gate_count == 17;
    return {ok, 0.0};
}

// ---- holonomy ----

CheckOutcome holonomy_abelian_check(const HarnessConfig& c) {
    const NamedFamily fam = make_named_family("rotation");
    const double theta0 = M_PI / 3.0;
    const ParameterLoop loop =
        latitude_loop(theta0, static_cast<std::size_t>(c.loop_steps));
    const ComplexMatrix gamma = holonomy(fam.family, fam.vacuum, loop);
    const cplx expected = std::exp(cplx{0.0, M_PI * (1.0 - std::cos(theta0))});
    return judge(std::abs(gamma(0, 0) - expected), 1e-6);
}

CheckOutcome holonomy_convergence_check(const HarnessConfig&) {
    const NamedFamily fam = make_named_family("two-parameter-su2");
    double prev = -1.0;
    double worst_ratio = 0.0;
    for (std::size_t steps : {256, 512, 1024, 2048}) {
        const ComplexMatrix g =
            holonomy_first_order(fam.family, fam.vacuum, circle_loop(0.8, steps));
        const double dev =
            (g.adjoint() * g - ComplexMatrix::identity(g.rows())).max_norm();
        if (prev >= 0.0) worst_ratio = std::max(worst_ratio, dev / prev);
        prev = dev;
    }
    return {worst_ratio <= 0.6, worst_ratio};
}

CheckOutcome holonomy_trivial_check(const HarnessConfig&) {
    const NamedFamily fam = make_named_family("degenerate-m2");
    ParameterLoop loop;
    loop.points = {{0.3, 0.1}, {0.3, 0.1}, {0.3, 0.1}};
    const ComplexMatrix g = holonomy(fam.family, fam.vacuum, loop);
    return judge((g - ComplexMatrix::identity(2)).max_norm(), 1e-12);
}

CheckOutcome holonomy_reversal_check(const HarnessConfig&) {
    const NamedFamily fam = make_named_family("degenerate-m2");
    const ParameterLoop loop = circle_loop(0.5, 512);
    const ComplexMatrix g = holonomy(fam.family, fam.vacuum, loop);
    const ComplexMatrix gr = holonomy(fam.family, fam.vacuum, reverse_loop(loop));
    return judge((gr * g - ComplexMatrix::identity(2)).max_norm(), 1e-8);
}

CheckOutcome holonomy_span_check(const HarnessConfig&) {
    const NamedFamily fam = make_named_family("degenerate-m2");
    std::vector<ComplexMatrix> samples;
    for (const auto& pt : {std::vector<double>{0.0, 0.0}, {0.4, 0.1}, {0.1, 0.5}}) {
        for (auto& f : curvature_at(fam.family, fam.vacuum, pt, 1e-4))
            samples.push_back(std::move(f));
    }
    const SpanProbe probe = holonomy_span_probe(samples, 2);
    if (!probe.irreducible || probe.spanned_dimension != 4) return {false, 1.0};
    // Abelian family spans exactly u(1).
    const NamedFamily rot = make_named_family("rotation");
    const auto fs = curvature_at(rot.family, rot.vacuum, {0.7, 0.3}, 1e-4);
    const SpanProbe abelian = holonomy_span_probe(fs, 1);
    return {abelian.spanned_dimension == 1 && abelian.irreducible, 0.0};
}

CheckOutcome connection_antihermitian_check(const HarnessConfig&) {
    const double h = kDefaultFdStep;
    const double tol = std::max(1e-8, 10.0 * h * h);
    double worst = 0.0;
    for (const char* name : {"rotation", "two-parameter-su2", "degenerate-m2"}) {
        const NamedFamily fam = make_named_family(name);
        const ConnectionSample s = connection_at(fam.family, fam.vacuum, {0.3, 0.6}, h);
        for (const auto& a : s.components)
            worst = std::max(worst, (a + a.adjoint()).max_norm());
    }
    return judge(worst, tol);
}

const std::vector<Check>& registry() {
    static const std::vector<Check> checks = {
        {"flag.descriptor.blocks", "Eq. A.9", false, flag_descriptor_check},
        {"flag.kernel.classify", "Eq. A.5", true, kernel_classify_check},
        {"flag.kernel.reject", "Eq. A.2", true, kernel_reject_check},
        {"gates.character.exhaustive", "Eq. 5.21", false, character_check},
        {"gates.cnot.matrices", "Eq. 5.23", false, cnot_matrices_check},
        {"gates.cnot.uniton", "Eq. 5.32", false, cnot_uniton_check},
        {"gates.f.recursion", "Eq. 5.38", false, f_recursion_harness_check},
        {"gates.f1.rebuild", "Eq. 5.43", false, f1_rebuild_check},
        {"gates.flip.reflection", "Eq. 5.37", false, flip_reflection_check},
        {"gates.grover.reflections", "Eq. 5.41", false, grover_check},
        {"gates.repeated-cnot.reflection", "Eq. 5.31", false,
         repeated_cnot_reflection_check},
        {"gates.walsh.involution", "Eq. 5.16", false, walsh_involution_check},
        {"gates.walsh.rowsum", "Eq. 5.18", false, rowsum_check},
        {"gates.walsh.t2", "Eq. 5.13", false, walsh_t2_check},
        {"gates.walsh.t3", "Eq. 5.14", false, walsh_t3_check},
        {"grassmann.chart.projection", "Eq. 2.8", true, chart_check},
        {"grassmann.volume.mc.k1n2", "Eq. 4.1", true,
         [](const HarnessConfig& c) { return mc_check(1, 2, c); }},
        {"grassmann.volume.mc.k1n3", "Eq. 4.1", true,
         [](const HarnessConfig& c) { return mc_check(1, 3, c); }},
        {"grassmann.volume.mc.k2n3", "Eq. 4.1", true,
         [](const HarnessConfig& c) { return mc_check(2, 3, c); }},
        {"grassmann.volume.mc.k2n4", "Eq. 4.1", true,
         [](const HarnessConfig& c) { return mc_check(2, 4, c); }},
        {"grassmann.volume.quadrature", "Eq. 4.2", false, quadrature_check},
        {"grassmann.volume.sphere-product", "Eq. 3.4", false, sphere_product_check},
        {"grassmann.volume.symmetry", "Eq. 3.5", false, volume_symmetry_check},
        {"holonomy.abelian.line-integral", "Eq. 6.19", false, holonomy_abelian_check},
        {"holonomy.connection.anti-hermitian", "Eq. 6.17", false,
         connection_antihermitian_check},
        {"holonomy.reversal", "Eq. 6.20", false, holonomy_reversal_check},
        {"holonomy.span.probe", "Eq. 6.18", false, holonomy_span_check},
        {"holonomy.trivial-loop", "Eq. 6.19", false, holonomy_trivial_check},
        {"holonomy.unitarity.convergence", "Eq. 6.19", false,
         holonomy_convergence_check},
        {"pauli.diagonalize", "Eq. B.6", false, pauli_diagonalize_check},
        {"pauli.weyl.commutation", "Eq. B.3", false, weyl_commutation_check},
        {"pauli.worked-example", "Eq. B.5", false, pauli_worked_example_check},
        {"synth.cccu.random", "Eq. C.6", true, cccu_check},
        {"synth.ccu.random", "Eq. C.4", true, ccu_check},
        {"synth.gate-counts", "plumbing", false, gate_count_check},
        {"synth.identity.mod2", "Eq. C.1", false, mod2_check},
        {"synth.root.reconstruct", "Eq. C.3", true, root_check},
    };
    return checks;
}

const Check& find_check(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return c;
    throw std::invalid_argument("unknown check id: " + id);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

HarnessConfig parse_config_text(const std::string& text, HarnessConfig base) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key=value, got: " + line);
        const auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t");
            if (a == std::string::npos) return std::string{};
            const auto b = s.find_last_not_of(" \t");
            return s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "seed") base.seed = std::stoull(value);
            else if (key == "tol") base.tol = std::stod(value);
            else if (key == "workers") base.workers = static_cast<unsigned>(std::stoul(value));
            else if (key == "mc_samples") base.mc_samples = std::stoull(value);
            else if (key == "loop_steps") base.loop_steps = std::stoull(value);
            else if (key == "timings") base.timings = (value == "1" || value == "true");
            else throw std::invalid_argument("config: unknown key: " + key);
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("config: bad value for " + key + ": " + value);
        }
    }
    return base;
}

HarnessConfig load_config_file(const std::string& path, HarnessConfig base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), base);
}

std::vector<std::string> all_check_ids() {
    std::vector<std::string> ids;
    for (const auto& c : registry()) ids.push_back(c.id);
    return ids;  // registry is kept sorted
}

std::vector<std::string> check_ids_with_prefix(const std::string& prefix) {
    std::vector<std::string> ids;
    for (const auto& c : registry())
        if (c.id.rfind(prefix, 0) == 0) ids.push_back(c.id);
    return ids;
}

std::vector<VerificationRecord> run_suite(const std::vector<std::string>& selection,
                                          const HarnessConfig& config) {
    if (selection.empty()) throw std::invalid_argument("run_suite: empty selection");
    std::vector<const Check*> checks;
    for (const auto& id : selection) checks.push_back(&find_check(id));

    std::vector<VerificationRecord> records(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= checks.size()) break;
            const Check& c = *checks[i];
            VerificationRecord rec;
            rec.check_id = c.id;
            rec.paper_anchor = c.anchor;
            if (c.seeded) rec.seed = config.seed;
            const auto start = std::chrono::steady_clock::now();
            try {
                const CheckOutcome out = c.run(config);
                rec.pass = out.pass;
                rec.max_error = out.max_error;
            } catch (const std::exception&) {
                rec.pass = false;
                rec.max_error = 1e300;
            }
            if (config.timings) {
                const auto stop = std::chrono::steady_clock::now();
                rec.runtime_ms =
                    std::chrono::duration<double, std::milli>(stop - start).count();
            }
            records[i] = std::move(rec);
        }
    };
    const unsigned nthreads =
        std::max(1u, std::min<unsigned>(config.workers,
                                        static_cast<unsigned>(checks.size())));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::sort(records.begin(), records.end(),
              [](const auto& a, const auto& b) { return a.check_id < b.check_id; });
    return records;
}

std::string format_report(const std::vector<VerificationRecord>& records,
                          ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::csv) {
        out << "check_id,paper_anchor,status,max_error,runtime_ms,seed\n";
        for (const auto& r : records) {
            out << r.check_id << ',' << r.paper_anchor << ','
                << (r.pass ? "pass" : "fail") << ',' << format_double(r.max_error)
                << ',' << format_double(r.runtime_ms) << ',';
            if (r.seed) out << *r.seed;
            out << '\n';
        }
        return out.str();
    }
    out << "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out << "  {\"check_id\": \"" << json_escape(r.check_id)
            << "\", \"paper_anchor\": \"" << json_escape(r.paper_anchor)
            << "\", \"status\": \"" << (r.pass ? "pass" : "fail")
            << "\", \"max_error\": " << format_double(r.max_error)
            << ", \"runtime_ms\": " << format_double(r.runtime_ms) << ", \"seed\": ";
        if (r.seed) out << *r.seed;
        else out << "null";
        out << '}' << (i + 1 < records.size() ? "," : "") << '\n';
    }
    out << "]\n";
    return out.str();
}

void emit_report(const std::vector<VerificationRecord>& records, ReportFormat format,
                 const std::string& path) {
    if (records.empty()) throw std::invalid_argument("emit_report: no records");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("emit_report: cannot write " + path);
    out << format_report(records, format);
}

std::vector<VerificationRecord> parse_report_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    std::vector<VerificationRecord> records;
    for (const auto& rj : j) {
        VerificationRecord r;
        r.check_id = rj.at("check_id").get<std::string>();
        r.paper_anchor = rj.at("paper_anchor").get<std::string>();
        r.pass = rj.at("status").get<std::string>() == "pass";
        r.max_error = rj.at("max_error").get<double>();
        r.runtime_ms = rj.at("runtime_ms").get<double>();
        if (!rj.at("seed").is_null()) r.seed = rj.at("seed").get<std::uint64_t>();
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace grassvol
