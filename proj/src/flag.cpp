#include "grassvol/flag.hpp"

#include <cmath>
#include <stdexcept>

namespace grassvol {

std::size_t SpectralType::dimension() const {
    std::size_t n = 0;
    for (const auto& p : pairs) n += p.multiplicity;
    return n;
}

bool in_kernel(const ComplexMatrix& x, double tol) {
    const ComplexMatrix e = unitary_exp(x, 2.0 * M_PI);
    return (e - ComplexMatrix::identity(x.rows())).max_norm() <= tol;
}

SpectralType spectral_type(const ComplexMatrix& x, double round_tol) {
    const HermitianEigen eig = hermitian_eigen(x);
    SpectralType out;
    for (double lambda : eig.eigenvalues) {
        const long long rounded = std::llround(lambda);
        if (std::abs(lambda - static_cast<double>(rounded)) > round_tol)
            throw std::invalid_argument(
                "spectral_type: non-integer eigenvalue, input not in the exponential kernel");
        if (!out.pairs.empty() && out.pairs.back().eigenvalue == rounded)
            ++out.pairs.back().multiplicity;
        else
            out.pairs.push_back({rounded, 1});
    }
    return out;
}

SpectralDecomposition spectral_decompose(const ComplexMatrix& x, double round_tol) {
    const std::size_t n = x.rows();
    const HermitianEigen eig = hermitian_eigen(x);
    SpectralDecomposition out;
    std::size_t col = 0;
    // Group eigenvector columns by the rounded eigenvalue (ascending order).
    while (col < n) {
        const long long value = std::llround(eig.eigenvalues[col]);
        if (std::abs(eig.eigenvalues[col] - static_cast<double>(value)) > round_tol)
            throw std::invalid_argument(
                "spectral_decompose: non-integer eigenvalue, input not in the exponential kernel");
        ComplexMatrix proj(n, n);
        std::size_t mult = 0;
        while (col < n && std::llround(eig.eigenvalues[col]) == value) {
            if (std::abs(eig.eigenvalues[col] - static_cast<double>(value)) > round_tol)
                throw std::invalid_argument(
                    "spectral_decompose: non-integer eigenvalue, input not in the exponential kernel");
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    proj(i, j) += eig.eigenvectors(i, col) *
                                  std::conj(eig.eigenvectors(j, col));
            ++col;
            ++mult;
        }
        out.spectral_type.pairs.push_back({value, mult});
        out.projections.push_back(GrassmannPoint{n, mult, std::move(proj)});
    }
    return out;
}

FlagDescriptor flag_descriptor(const SpectralType& t) {
    FlagDescriptor d;
    std::size_t sumsq = 0;
    std::size_t n = 0;
    for (const auto& p : t.pairs) {
        d.quotient.push_back(p.multiplicity);
        sumsq += p.multiplicity * p.multiplicity;
        n += p.multiplicity;
    }
    d.complex_dimension = (n * n - sumsq) / 2;
    return d;
}

double flag_volume(const SpectralType& t) {
    const std::size_t n = t.dimension();
    if (n == 0) return 1.0;
    double vol = unitary_volume(static_cast<unsigned>(n));
    for (const auto& p : t.pairs)
        vol /= unitary_volume(static_cast<unsigned>(p.multiplicity));
    return vol;
}

}  // namespace grassvol
