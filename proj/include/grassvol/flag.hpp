#pragma once

#include <vector>

#include "grassvol/complexmat.hpp"
#include "grassvol/grassmann.hpp"

namespace grassvol {

/// Integer eigenvalues with multiplicities, eigenvalues strictly increasing.
struct SpectralType {
    struct Pair {
        long long eigenvalue;
        std::size_t multiplicity;
        bool operator==(const Pair&) const = default;
    };
    std::vector<Pair> pairs;
    std::size_t dimension() const;
    bool operator==(const SpectralType&) const = default;
};

/// X = sum n_j P_j with mutually orthogonal projections summing to identity.
struct SpectralDecomposition {
    SpectralType spectral_type;
    std::vector<GrassmannPoint> projections;  // one per eigenvalue, same order
};

struct FlagDescriptor {
    std::vector<std::size_t> quotient;  // block sizes (d_1, ..., d_j)
    std::size_t complex_dimension;      // (n^2 - sum d_j^2) / 2
};

/// Separate from the linalg tolerance: eigenvalues of kernel elements must
/// round decisively to integers.
constexpr double kIntegerSpectrumTol = 1e-7;

/// True iff exp(2 pi i X) = identity within tol. Rejects non-Hermitian input.
bool in_kernel(const ComplexMatrix& x, double tol = Tolerances{}.predicate);

/// Integer spectrum with multiplicities. Throws if any eigenvalue rounding
/// residual exceeds `round_tol` (the input is then not a kernel element).
SpectralType spectral_type(const ComplexMatrix& x,
                           double round_tol = kIntegerSpectrumTol);

SpectralDecomposition spectral_decompose(const ComplexMatrix& x,
                                         double round_tol = kIntegerSpectrumTol);

/// Block sizes and complex dimension of U(n)/(U(d_1) x ... x U(d_j)).
FlagDescriptor flag_descriptor(const SpectralType& t);

/// Vol of the generalized flag manifold via the unitary-volume quotient.
double flag_volume(const SpectralType& t);

}  // namespace grassvol
