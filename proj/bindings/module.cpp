#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grassvol/flag.hpp"
#include "grassvol/gates.hpp"
#include "grassvol/grassmann.hpp"
#include "grassvol/harness.hpp"
#include "grassvol/holonomy.hpp"
#include "grassvol/pauli.hpp"
#include "grassvol/synthesis.hpp"

namespace py = pybind11;
using namespace grassvol;

namespace {

py::array_t<cplx> to_numpy(const ComplexMatrix& m) {
    py::array_t<cplx> out({m.rows(), m.cols()});
    auto buf = out.mutable_unchecked<2>();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) buf(i, j) = m(i, j);
    return out;
}

ComplexMatrix from_numpy(const py::array& a) {
    const py::array_t<cplx> arr = py::array_t<cplx>::ensure(a);
    if (!arr || arr.ndim() != 2)
        throw std::invalid_argument("expected a two-dimensional complex array");
    auto buf = arr.unchecked<2>();
    ComplexMatrix m(static_cast<std::size_t>(arr.shape(0)),
                    static_cast<std::size_t>(arr.shape(1)));
    for (py::ssize_t i = 0; i < arr.shape(0); ++i)
        for (py::ssize_t j = 0; j < arr.shape(1); ++j)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = buf(i, j);
    return m;
}

ParameterLoop loop_from_points(const std::vector<std::vector<double>>& points) {
    ParameterLoop loop;
    loop.points = points;
    return loop;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Grassmannian volumes, gate algebra, and adiabatic holonomy";

    // volumes
    mod.def("sphere_volume", &sphere_volume, py::arg("k"));
    mod.def("unitary_volume", &unitary_volume, py::arg("n"));
    mod.def("grassmann_volume", &grassmann_volume, py::arg("k"), py::arg("n"));
    mod.def("chart_count", &chart_count, py::arg("k"), py::arg("n"));
    mod.def("projective_volume_quadrature", &projective_volume_quadrature,
            py::arg("n"), py::arg("grid") = 64);
    mod.def(
        "mc_volume",
        [](unsigned k, unsigned n, std::uint64_t samples, std::uint64_t seed,
           unsigned workers) {
            const VolumeEstimate e = mc_volume(k, n, samples, seed, workers);
            py::dict d;
            d["mean"] = e.mean;
            d["standard_error"] = e.standard_error;
            d["samples"] = e.samples;
            d["seed"] = e.seed;
            return d;
        },
        py::arg("k"), py::arg("n"), py::arg("samples") = 1'000'000,
        py::arg("seed") = 42, py::arg("workers") = 1);

    // charts
    mod.def("special_projection", [](std::size_t k, std::size_t n) {
        return to_numpy(special_projection(k, n));
    });
    mod.def(
        "chart_point",
        [](std::size_t n, std::size_t k, const py::array& base, const py::array& z) {
            OikeChart c;
            c.n = n;
            c.k = k;
            c.base = from_numpy(base);
            c.z = from_numpy(z);
            return to_numpy(chart_point(c).p);
        },
        py::arg("n"), py::arg("k"), py::arg("base"), py::arg("z"));
    mod.def("det_lambda",
            [](const py::array& z) { return det_lambda(from_numpy(z)); });
    mod.def("volume_density", [](const py::array& z, std::size_t n) {
        return volume_density(from_numpy(z), n);
    });

    // spectral classification
    mod.def("in_kernel",
            [](const py::array& x) { return in_kernel(from_numpy(x)); });
    mod.def("spectral_type", [](const py::array& x) {
        std::vector<std::pair<long long, std::size_t>> out;
        for (const auto& p : spectral_type(from_numpy(x)).pairs)
            out.emplace_back(p.eigenvalue, p.multiplicity);
        return out;
    });
    mod.def("spectral_decompose", [](const py::array& x) {
        const SpectralDecomposition dec = spectral_decompose(from_numpy(x));
        py::list projections;
        std::vector<std::pair<long long, std::size_t>> type;
        for (std::size_t i = 0; i < dec.projections.size(); ++i) {
            projections.append(to_numpy(dec.projections[i].p));
            type.emplace_back(dec.spectral_type.pairs[i].eigenvalue,
                              dec.spectral_type.pairs[i].multiplicity);
        }
        py::dict d;
        d["spectral_type"] = type;
        d["projections"] = projections;
        return d;
    });
    mod.def("flag_descriptor",
            [](const std::vector<std::pair<long long, std::size_t>>& pairs) {
                SpectralType t;
                for (const auto& [e, m] : pairs) t.pairs.push_back({e, m});
                const FlagDescriptor d = flag_descriptor(t);
                py::dict out;
                out["quotient"] = d.quotient;
                out["complex_dimension"] = d.complex_dimension;
                return out;
            });
    mod.def("flag_volume",
            [](const std::vector<std::pair<long long, std::size_t>>& pairs) {
                SpectralType t;
                for (const auto& [e, m] : pairs) t.pairs.push_back({e, m});
                return flag_volume(t);
            });

    // gate algebra
    mod.def("walsh_power",
            [](unsigned t) { return to_numpy(walsh_power(t).m); });
    mod.def("cnot", [](unsigned t, unsigned control, unsigned target) {
        return to_numpy(cnot(t, control, target).m);
    });
    mod.def("repeated_cnot",
            [](unsigned t) { return to_numpy(repeated_cnot(t).m); });
    mod.def("f_matrix", [](unsigned t, std::uint64_t k) {
        return to_numpy(f_matrix(t, k).m);
    });
    mod.def("grover_reflections", [](unsigned t, std::uint64_t i) {
        const GroverReflections r = grover_reflections(BasisIndex(t, i));
        return py::make_tuple(to_numpy(r.marked.m), to_numpy(r.diffusion.m));
    });
    mod.def("f1_from_repeated_cnot",
            [](unsigned t) { return to_numpy(f1_from_repeated_cnot(t).m); });
    mod.def("character", [](unsigned t, std::uint64_t i, std::uint64_t j) {
        return character(BasisIndex(t, i), BasisIndex(t, j));
    });

    // generalized pauli pair
    mod.def("clock_shift", [](std::size_t n) {
        const ClockShiftPair cs = clock_shift(n);
        return py::make_tuple(to_numpy(cs.shift), to_numpy(cs.clock));
    });
    mod.def("vandermonde_w",
            [](std::size_t n) { return to_numpy(vandermonde_w(n)); });
    mod.def("diagonalize_shift_error", &diagonalize_shift_error, py::arg("n"));

    // synthesis
    mod.def("unitary_root", [](const py::array& u, unsigned degree) {
        return to_numpy(unitary_root(from_numpy(u), degree));
    });
    mod.def("direct_controlled", [](const py::array& u, unsigned controls) {
        return to_numpy(direct_controlled(from_numpy(u), controls).m);
    });
    auto report_to_dict = [](const SynthesisReport& r) {
        py::dict d;
        d["matrix"] = to_numpy(simulate(r.circuit).m);
        d["reference"] = to_numpy(r.reference.m);
        d["max_error"] = r.max_error;
        d["gate_count"] = r.gate_count;
        d["circuit_json"] = circuit_to_json(r.circuit);
        return d;
    };
    mod.def("synthesize_ccu", [report_to_dict](const py::array& u) {
        return report_to_dict(synthesize_ccu(from_numpy(u)));
    });
    mod.def("synthesize_cccu", [report_to_dict](const py::array& u) {
        return report_to_dict(synthesize_cccu(from_numpy(u)));
    });
    mod.def("gate_count_table", [](unsigned max_controls) {
        std::vector<std::pair<unsigned, std::size_t>> out;
        for (const auto& row : gate_count_table(max_controls))
            out.emplace_back(row.controls, row.count);
        return out;
    });

    // holonomy over the built-in families
    mod.def(
        "holonomy",
        [](const std::string& family, const std::vector<std::vector<double>>& loop,
           bool first_order) {
            const NamedFamily fam = make_named_family(family);
            const ParameterLoop l = loop_from_points(loop);
            return to_numpy(first_order
                                ? holonomy_first_order(fam.family, fam.vacuum, l)
                                : holonomy(fam.family, fam.vacuum, l));
        },
        py::arg("family"), py::arg("loop"), py::arg("first_order") = false);
    mod.def(
        "circle_loop",
        [](double radius, std::size_t steps) { return circle_loop(radius, steps).points; },
        py::arg("radius"), py::arg("steps"));
    mod.def(
        "latitude_loop",
        [](double theta0, std::size_t steps) {
            return latitude_loop(theta0, steps).points;
        },
        py::arg("theta0"), py::arg("steps"));

    // verification harness
    mod.def("all_check_ids", &all_check_ids);
    mod.def(
        "run_checks",
        [](const std::vector<std::string>& selection, std::uint64_t seed,
           unsigned workers, std::uint64_t mc_samples, std::uint64_t loop_steps) {
            HarnessConfig cfg;
            cfg.seed = seed;
            cfg.workers = workers;
            cfg.mc_samples = mc_samples;
            cfg.loop_steps = loop_steps;
            const auto recs =
                run_suite(selection.empty() ? all_check_ids() : selection, cfg);
            py::list out;
            for (const auto& r : recs) {
                py::dict d;
                d["check_id"] = r.check_id;
                d["paper_anchor"] = r.paper_anchor;
                d["pass"] = r.pass;
                d["max_error"] = r.max_error;
                out.append(d);
            }
            return out;
        },
        py::arg("selection") = std::vector<std::string>{}, py::arg("seed") = 42,
        py::arg("workers") = 1, py::arg("mc_samples") = 1'000'000,
        py::arg("loop_steps") = 10'000);
}
