#include "grassvol/holonomy.hpp"

#include <cmath>
#include <stdexcept>

namespace grassvol {

bool VacuumFrame::valid(double tol) const {
    if (frame.rows() != dim || frame.cols() != m) return false;
    return (frame.adjoint() * frame - ComplexMatrix::identity(m)).max_norm() <= tol;
}

namespace {

std::vector<double> shifted(const std::vector<double>& lambda, std::size_t mu, double delta) {
    std::vector<double> out = lambda;
    out[mu] += delta;
    return out;
}

ComplexMatrix anti_hermitian_part(const ComplexMatrix& x) {
    return (x - x.adjoint()) * cplx{0.5, 0.0};
}

// exp(B) for anti-Hermitian B, exactly unitary: B = iH with H Hermitian.
ComplexMatrix exp_anti_hermitian(const ComplexMatrix& b) {
    const ComplexMatrix h = b * cplx{0.0, -1.0};
    return unitary_exp(h, 1.0);
}

}  // namespace

GrassmannPoint projector_at(const UnitaryFamily& f, const VacuumFrame& vac,
                            const std::vector<double>& lambda) {
    const ComplexMatrix w = f.evaluate(lambda);
    if (!is_unitary(w, 1e-8))
        throw std::invalid_argument("projector_at: family evaluation not unitary");
    const ComplexMatrix p0 = vac.frame * vac.frame.adjoint();
    return GrassmannPoint{vac.dim, vac.m, w * p0 * w.adjoint()};
}

ConnectionSample connection_at(const UnitaryFamily& f, const VacuumFrame& vac,
                               const std::vector<double>& lambda, double h) {
    if (h <= 0.0) throw std::invalid_argument("connection_at: h must be positive");
    ConnectionSample out;
    out.point = lambda;
    const ComplexMatrix wdag = f.evaluate(lambda).adjoint();
    const ComplexMatrix frame_dag = vac.frame.adjoint();
    for (std::size_t mu = 0; mu < f.param_dim; ++mu) {
        const ComplexMatrix wp = f.evaluate(shifted(lambda, mu, h));
        const ComplexMatrix wm = f.evaluate(shifted(lambda, mu, -h));
        const ComplexMatrix dw = (wp - wm) * cplx{1.0 / (2.0 * h), 0.0};
        out.components.push_back(frame_dag * (wdag * dw) * vac.frame);
    }
    return out;
}

std::vector<ComplexMatrix> curvature_at(const UnitaryFamily& f, const VacuumFrame& vac,
                                        const std::vector<double>& lambda, double h) {
    if (f.param_dim < 2)
        throw std::invalid_argument("curvature_at: need at least two parameters");
    // Connection samples at +-h along every direction for the outer derivative.
    std::vector<ConnectionSample> plus, minus;
    for (std::size_t mu = 0; mu < f.param_dim; ++mu) {
        plus.push_back(connection_at(f, vac, shifted(lambda, mu, h), h));
        minus.push_back(connection_at(f, vac, shifted(lambda, mu, -h), h));
    }
    const ConnectionSample center = connection_at(f, vac, lambda, h);
    std::vector<ComplexMatrix> out;
    for (std::size_t mu = 0; mu < f.param_dim; ++mu) {
        for (std::size_t nu = mu + 1; nu < f.param_dim; ++nu) {
            const ComplexMatrix d_mu_a_nu =
                (plus[mu].components[nu] - minus[mu].components[nu]) *
                cplx{1.0 / (2.0 * h), 0.0};
            const ComplexMatrix d_nu_a_mu =
                (plus[nu].components[mu] - minus[nu].components[mu]) *
                cplx{1.0 / (2.0 * h), 0.0};
            const ComplexMatrix& a_mu = center.components[mu];
            const ComplexMatrix& a_nu = center.components[nu];
            out.push_back(d_mu_a_nu - d_nu_a_mu + a_mu * a_nu - a_nu * a_mu);
        }
    }
    return out;
}

namespace {

void check_loop(const ParameterLoop& loop) {
    if (loop.points.size() < 2)
        throw std::invalid_argument("holonomy: loop needs at least two points");
    if (loop.points.front() != loop.points.back())
        throw std::invalid_argument("holonomy: loop is not closed");
}

// Segment generator sum_mu A_mu(midpoint) * dl_mu.
ComplexMatrix segment_generator(const UnitaryFamily& f, const VacuumFrame& vac,
                                const std::vector<double>& a,
                                const std::vector<double>& b, double h) {
    std::vector<double> mid(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) mid[i] = 0.5 * (a[i] + b[i]);
    const ConnectionSample conn = connection_at(f, vac, mid, h);
    ComplexMatrix gen(vac.m, vac.m);
    for (std::size_t mu = 0; mu < f.param_dim; ++mu)
        gen = gen + conn.components[mu] * cplx{b[mu] - a[mu], 0.0};
    return gen;
}

}  // namespace

ComplexMatrix holonomy(const UnitaryFamily& f, const VacuumFrame& vac,
                       const ParameterLoop& loop, double h) {
    check_loop(loop);
    ComplexMatrix gamma = ComplexMatrix::identity(vac.m);
    for (std::size_t s = 0; s + 1 < loop.points.size(); ++s) {
        const ComplexMatrix gen =
            segment_generator(f, vac, loop.points[s], loop.points[s + 1], h);
        gamma = exp_anti_hermitian(anti_hermitian_part(gen)) * gamma;
    }
    return gamma;
}

ComplexMatrix holonomy_first_order(const UnitaryFamily& f, const VacuumFrame& vac,
                                   const ParameterLoop& loop, double h) {
    check_loop(loop);
    ComplexMatrix gamma = ComplexMatrix::identity(vac.m);
    for (std::size_t s = 0; s + 1 < loop.points.size(); ++s) {
        const ComplexMatrix gen =
            segment_generator(f, vac, loop.points[s], loop.points[s + 1], h);
        gamma = (ComplexMatrix::identity(vac.m) + anti_hermitian_part(gen)) * gamma;
    }
    return gamma;
}

namespace {

// Flatten an m x m matrix into a real vector of length 2 m^2.
std::vector<double> flatten(const ComplexMatrix& x) {
    std::vector<double> v;
    v.reserve(2 * x.data().size());
    for (const auto& e : x.data()) {
        v.push_back(e.real());
        v.push_back(e.imag());
    }
    return v;
}

// Gram-Schmidt insertion; returns true if the vector enlarged the span.
bool insert_into_span(std::vector<std::vector<double>>& basis, std::vector<double> v,
                      double tol) {
    double norm0 = 0.0;
    for (double x : v) norm0 += x * x;
    norm0 = std::sqrt(norm0);
    if (norm0 < tol) return false;
    for (const auto& b : basis) {
        double dot = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) dot += v[i] * b[i];
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= dot * b[i];
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < tol * std::max(norm0, 1.0)) return false;
    for (double& x : v) x /= norm;
    basis.push_back(std::move(v));
    return true;
}

}  // namespace

SpanProbe holonomy_span_probe(const std::vector<ComplexMatrix>& samples, std::size_t m) {
    constexpr double kSpanTol = 1e-8;
    constexpr int kMaxBracketDepth = 8;
    std::vector<ComplexMatrix> elements;
    std::vector<std::vector<double>> basis;
    for (const auto& s : samples) {
        const ComplexMatrix a = (s - s.adjoint()) * cplx{0.5, 0.0};
        if (insert_into_span(basis, flatten(a), kSpanTol)) elements.push_back(a);
    }
    const std::size_t full = m * m;
    for (int depth = 0; depth < kMaxBracketDepth && basis.size() < full; ++depth) {
        const std::size_t count = elements.size();
        bool grew = false;
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = i + 1; j < count; ++j) {
                const ComplexMatrix br = elements[i] * elements[j] - elements[j] * elements[i];
                if (insert_into_span(basis, flatten(br), kSpanTol)) {
                    elements.push_back(br);
                    grew = true;
                }
            }
        }
        if (!grew) break;
    }
    return SpanProbe{basis.size(), basis.size() == full};
}

namespace {

ComplexMatrix rot_z(double angle) {  // exp(-i angle sigma_z / 2)
    ComplexMatrix m(2, 2);
    m(0, 0) = std::exp(cplx{0.0, -angle / 2.0});
    m(1, 1) = std::exp(cplx{0.0, angle / 2.0});
    return m;
}

ComplexMatrix rot_y(double angle) {  // exp(-i angle sigma_y / 2)
    ComplexMatrix m(2, 2);
    const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
    m(0, 0) = c; m(0, 1) = -s;
    m(1, 0) = s; m(1, 1) = c;
    return m;
}

ComplexMatrix hermitian_two(double a, double b) {
    // a sigma_x + b sigma_y
    ComplexMatrix m(2, 2);
    m(0, 1) = cplx{a, -b};
    m(1, 0) = cplx{a, b};
    return m;
}

}  // namespace

NamedFamily make_named_family(const std::string& name) {
    NamedFamily out;
    if (name == "rotation") {
        // Spin-1/2 Berry family: (theta, phi) -> Rz(phi) Ry(theta) Rz(-phi).
        out.family.param_dim = 2;
        out.family.base_point = {0.0, 0.0};
        out.family.evaluate = [](const std::vector<double>& l) {
            return rot_z(l[1]) * rot_y(l[0]) * rot_z(-l[1]);
        };
        out.vacuum.dim = 2;
        out.vacuum.m = 1;
        out.vacuum.frame = ComplexMatrix(2, 1);
        out.vacuum.frame(0, 0) = 1.0;
        return out;
    }
    if (name == "two-parameter-su2") {
        out.family.param_dim = 2;
        out.family.base_point = {0.0, 0.0};
        out.family.evaluate = [](const std::vector<double>& l) {
            return unitary_exp(hermitian_two(l[0], l[1]), 1.0);
        };
        out.vacuum.dim = 2;
        out.vacuum.m = 1;
        out.vacuum.frame = ComplexMatrix(2, 1);
        out.vacuum.frame(0, 0) = 1.0;
        return out;
    }
    if (name == "degenerate-m2") {
        // Two non-commuting 4 x 4 generators mixing the rank-2 vacuum block
        // with the excited block.
        ComplexMatrix g1(4, 4), g2(4, 4);
        g1(0, 2) = 1.0; g1(2, 0) = 1.0;
        g1(1, 3) = 0.5; g1(3, 1) = 0.5;
        g2(0, 3) = cplx{0.0, -1.0}; g2(3, 0) = cplx{0.0, 1.0};
        g2(1, 2) = 0.7; g2(2, 1) = 0.7;
        g2(2, 3) = 0.3; g2(3, 2) = 0.3;
        out.family.param_dim = 2;
        out.family.base_point = {0.0, 0.0};
        out.family.evaluate = [g1, g2](const std::vector<double>& l) {
            return unitary_exp(g1 * cplx{l[0], 0.0} + g2 * cplx{l[1], 0.0}, 1.0);
        };
        out.vacuum.dim = 4;
        out.vacuum.m = 2;
        out.vacuum.frame = ComplexMatrix(4, 2);
        out.vacuum.frame(0, 0) = 1.0;
        out.vacuum.frame(1, 1) = 1.0;
        return out;
    }
    throw std::invalid_argument("unknown family: " + name);
}

ParameterLoop circle_loop(double radius, std::size_t steps) {
    if (steps < 2) throw std::invalid_argument("circle_loop: steps must be >= 2");
    ParameterLoop loop;
    loop.points.reserve(steps + 1);
    for (std::size_t s = 0; s <= steps; ++s) {
        const double t = 2.0 * M_PI * static_cast<double>(s) / static_cast<double>(steps);
        loop.points.push_back({radius * (1.0 - std::cos(t)), radius * std::sin(t)});
    }
    loop.points.back() = loop.points.front();  // exact closure
    return loop;
}

ParameterLoop latitude_loop(double theta0, std::size_t steps) {
    if (steps < 6) throw std::invalid_argument("latitude_loop: steps must be >= 6");
    ParameterLoop loop;
    const std::size_t leg = std::max<std::size_t>(steps / 8, 1);
    const std::size_t arc = steps - 2 * leg;
    for (std::size_t s = 0; s <= leg; ++s)
        loop.points.push_back({theta0 * static_cast<double>(s) / static_cast<double>(leg), 0.0});
    for (std::size_t s = 1; s <= arc; ++s)
        loop.points.push_back(
            {theta0, 2.0 * M_PI * static_cast<double>(s) / static_cast<double>(arc)});
    for (std::size_t s = 1; s <= leg; ++s)
        loop.points.push_back(
            {theta0 * static_cast<double>(leg - s) / static_cast<double>(leg),
             2.0 * M_PI});
    loop.points.back() = loop.points.front();
    return loop;
}

ParameterLoop reverse_loop(const ParameterLoop& loop) {
    ParameterLoop out;
    out.points.assign(loop.points.rbegin(), loop.points.rend());
    return out;
}

ParameterLoop concat_loops(const ParameterLoop& first, const ParameterLoop& second) {
    if (first.points.back() != second.points.front())
        throw std::invalid_argument("concat_loops: endpoints do not match");
    ParameterLoop out = first;
    out.points.insert(out.points.end(), second.points.begin() + 1, second.points.end());
    return out;
}

}  // namespace grassvol
