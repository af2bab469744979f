#pragma once

#include <cstdint>

#include "grassvol/complexmat.hpp"

namespace grassvol {

/// A point of G_{k,n}(C): an n x n projection of rank k.
struct GrassmannPoint {
    std::size_t n = 0;
    std::size_t k = 0;
    ComplexMatrix p;

    bool valid(double tol = Tolerances{}.predicate) const;
};

/// Oike chart: local coordinates Z (an (n-k) x k complex matrix) around the
/// base point A E_k A^{-1}.
struct OikeChart {
    std::size_t n = 0;
    std::size_t k = 0;
    ComplexMatrix base;  // unitary A
    ComplexMatrix z;     // (n-k) x k
};

struct VolumeEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// E_k = diag(1_k, 0_{n-k}).
ComplexMatrix special_projection(std::size_t k, std::size_t n);

/// P = V V^dagger from an n x k matrix with orthonormal columns.
GrassmannPoint point_from_basis(const ComplexMatrix& v,
                                double tol = Tolerances{}.predicate);

/// Evaluate the chart: conjugate E_k by [[1_k, -Z^dagger],[Z, 1_{n-k}]] and A.
GrassmannPoint chart_point(const OikeChart& chart);

/// det(1_k + Z^dagger Z), always real and >= 1.
double det_lambda(const ComplexMatrix& z);

/// det(1_k + Z^dagger Z)^{-n}: the volume density in Oike coordinates.
double volume_density(const ComplexMatrix& z, std::size_t n);

/// Vol(S^{2k-1}) = 2 pi^k / (k-1)!.
double sphere_volume(unsigned k);

/// Vol(U(n)) = 2^n pi^{n(n+1)/2} / (0! 1! ... (n-1)!).
double unitary_volume(unsigned n);

/// Vol(G_{k,n}(C)) = [0!1!...(k-1)! / ((n-k)!...(n-1)!)] pi^{k(n-k)}.
/// k = 0 and k = n are single points with volume 1.
double grassmann_volume(unsigned k, unsigned n);

/// Number of Oike charts covering G_{k,n}(C): C(n, k).
std::uint64_t chart_count(unsigned k, unsigned n);

/// Importance-sampled Monte Carlo estimate of the volume integral over
/// M(n-k, k; C). The unitary factors of Z are integrated out analytically;
/// the min(n-k, k) eigenvalues of Z^dagger Z are each drawn as u/(1-u) with
/// u uniform, which makes the importance weight bounded for every (k, n).
/// Deterministic for a fixed seed regardless of worker count: samples are
/// processed in fixed-size blocks, each with its own counter stream, and
/// block sums are reduced in block order.
VolumeEstimate mc_volume(unsigned k, unsigned n, std::uint64_t samples,
                         std::uint64_t seed, unsigned workers = 1);

/// Deterministic evaluation of the k = 1 volume integral: angular factor
/// pi^{n-1} times the product of one-dimensional integrals obtained from the
/// simplex substitution, each by composite Gauss-Legendre quadrature (the
/// unbounded integral mapped to (0,1) by xi = s/(1-s)).
double projective_volume_quadrature(unsigned n, unsigned grid);

}  // namespace grassvol
