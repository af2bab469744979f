#include "grassvol/pauli.hpp"

#include <cmath>
#include <stdexcept>

namespace grassvol {

namespace {

// exp(2 pi i k / n), computed per entry to avoid phase drift.
cplx root_of_unity(std::size_t k, std::size_t n) {
    const double angle = 2.0 * M_PI * static_cast<double>(k % n) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

ClockShiftPair clock_shift(std::size_t n) {
    if (n < 2) throw std::invalid_argument("clock_shift: n must be >= 2");
    ClockShiftPair out;
    out.n = n;
    out.shift = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) out.shift((j + 1) % n, j) = 1.0;
    out.clock = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) out.clock(j, j) = root_of_unity(j, n);
    return out;
}

ComplexMatrix vandermonde_w(std::size_t n) {
    if (n < 2) throw std::invalid_argument("vandermonde_w: n must be >= 2");
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    ComplexMatrix w(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            w(j, k) = scale * root_of_unity(k * ((n - j) % n), n);
    return w;
}

double diagonalize_shift_error(std::size_t n) {
    const ClockShiftPair cs = clock_shift(n);
    const ComplexMatrix w = vandermonde_w(n);
    return (w * cs.clock * w.adjoint() - cs.shift).max_norm();
}

bool diagonalize_shift(std::size_t n, double tol) {
    return diagonalize_shift_error(n) <= tol;
}

}  // namespace grassvol
