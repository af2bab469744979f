#pragma once

#include "grassvol/complexmat.hpp"

namespace grassvol {

/// The dimension-n clock/shift pair generalizing (sigma_1, sigma_3):
/// shift is the cyclic permutation, clock the diagonal of powers of
/// sigma = exp(2 pi i / n).
struct ClockShiftPair {
    std::size_t n = 2;
    ComplexMatrix shift;  // Sigma_1
    ComplexMatrix clock;  // Sigma_3
};

ClockShiftPair clock_shift(std::size_t n);

/// The generalized Walsh-Hadamard matrix: row j carries powers of
/// sigma^{n-j}, scaled by n^{-1/2}. Unitary; diagonalizes the shift.
ComplexMatrix vandermonde_w(std::size_t n);

/// Largest entrywise deviation of W Sigma_3 W^dagger from Sigma_1.
double diagonalize_shift_error(std::size_t n);
bool diagonalize_shift(std::size_t n, double tol = 1e-12);

}  // namespace grassvol
