#pragma once

#include <functional>
#include <string>
#include <vector>

#include "grassvol/complexmat.hpp"
#include "grassvol/grassmann.hpp"

namespace grassvol {

/// Orthonormal frame spanning the m-fold degenerate vacuum inside the
/// N-dimensional truncation of the carrier space.
struct VacuumFrame {
    std::size_t dim = 1;  // truncation dimension N
    std::size_t m = 1;    // degeneracy
    ComplexMatrix frame;  // N x m, orthonormal columns

    bool valid(double tol = Tolerances{}.predicate) const;
};

/// Isospectral unitary family over a real parameter space, with
/// W(base_point) = identity. `evaluate` must be a pure function.
struct UnitaryFamily {
    std::size_t param_dim = 1;
    std::vector<double> base_point;
    std::function<ComplexMatrix(const std::vector<double>&)> evaluate;
};

/// Discretized closed path; first point equals last point exactly.
struct ParameterLoop {
    std::vector<std::vector<double>> points;
    std::size_t steps() const { return points.empty() ? 0 : points.size() - 1; }
};

/// Connection components at one parameter point, one m x m matrix per
/// parameter direction.
struct ConnectionSample {
    std::vector<double> point;
    std::vector<ComplexMatrix> components;
};

struct SpanProbe {
    std::size_t spanned_dimension = 0;
    bool irreducible = false;
};

constexpr double kDefaultFdStep = 1e-5;
constexpr std::size_t kDefaultLoopSteps = 4096;

/// P(lambda) = W (sum v_j v_j^dagger) W^{-1}.
GrassmannPoint projector_at(const UnitaryFamily& f, const VacuumFrame& vac,
                            const std::vector<double>& lambda);

/// Central-difference sample of the adiabatic connection
/// A_mu = frame^dagger W^dagger [W(l + h e_mu) - W(l - h e_mu)]/(2h) frame.
ConnectionSample connection_at(const UnitaryFamily& f, const VacuumFrame& vac,
                               const std::vector<double>& lambda,
                               double h = kDefaultFdStep);

/// F_{mu nu} = d_mu A_nu - d_nu A_mu + [A_mu, A_nu] for mu < nu,
/// by nested central differences.
std::vector<ComplexMatrix> curvature_at(const UnitaryFamily& f, const VacuumFrame& vac,
                                        const std::vector<double>& lambda,
                                        double h = kDefaultFdStep);

/// Path-ordered holonomy over a closed loop: ordered product of
/// exp(sum_mu A_mu(midpoint) dl_mu), each factor made exactly unitary by
/// projecting the segment generator onto its anti-Hermitian part. Earlier
/// segments are applied first (rightmost).
ComplexMatrix holonomy(const UnitaryFamily& f, const VacuumFrame& vac,
                       const ParameterLoop& loop, double h = kDefaultFdStep);

/// First-order (Euler) product integral prod(1 + A dl): a diagnostic whose
/// unitarity deviation scales like 1/steps, used to measure convergence.
ComplexMatrix holonomy_first_order(const UnitaryFamily& f, const VacuumFrame& vac,
                                   const ParameterLoop& loop, double h = kDefaultFdStep);

/// Real dimension of the Lie algebra spanned by the given anti-Hermitian
/// m x m curvature samples, closed under commutators; irreducible when the
/// span reaches dim u(m) = m^2.
SpanProbe holonomy_span_probe(const std::vector<ComplexMatrix>& samples, std::size_t m);

/// Built-in families selectable by name: "rotation" (abelian spin-1/2 Berry
/// family, N=2, m=1), "two-parameter-su2" (N=2, m=1), "degenerate-m2"
/// (N=4, m=2, non-abelian).
struct NamedFamily {
    UnitaryFamily family;
    VacuumFrame vacuum;
};
NamedFamily make_named_family(const std::string& name);

/// Circle of the given radius through the base point (0, 0) in a
/// two-dimensional parameter plane, discretized into `steps` segments.
ParameterLoop circle_loop(double radius, std::size_t steps);

/// Latitude-style loop for the "rotation" family: out to theta0 along the
/// first axis, once around the second, and back.
ParameterLoop latitude_loop(double theta0, std::size_t steps);

ParameterLoop reverse_loop(const ParameterLoop& loop);
ParameterLoop concat_loops(const ParameterLoop& first, const ParameterLoop& second);

}  // namespace grassvol
