#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace grassvol {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major storage. The single carrier type for
/// projections, unitaries, gates and forms throughout the library.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return data_; }
    std::vector<cplx>& data() { return data_; }

    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(cplx scalar) const;
    ComplexMatrix operator-() const { return *this * cplx{-1.0, 0.0}; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    cplx trace() const;
    /// Largest entrywise modulus.
    double max_norm() const;
    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

inline ComplexMatrix operator*(cplx scalar, const ComplexMatrix& m) { return m * scalar; }

/// Default numerical tolerances for dense double-precision algebra at
/// dimensions up to 1024. Both are overridable per call site.
struct Tolerances {
    double linalg = 1e-10;
    double predicate = 1e-9;
};

/// Kronecker product: (a ox b)_{ip,jq} = a_ij * b_pq.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Determinant via pivoted LU. Throws std::invalid_argument on non-square input.
cplx det(const ComplexMatrix& a);

/// Inverse via Gauss-Jordan with partial pivoting. Throws on singular input.
ComplexMatrix inverse(const ComplexMatrix& a);

struct HermitianEigen {
    std::vector<double> eigenvalues;  // sorted ascending
    ComplexMatrix eigenvectors;       // orthonormal columns, same order
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
/// Rejects inputs with ||a - a^dagger||_max above `tol`.
HermitianEigen hermitian_eigen(const ComplexMatrix& a, double tol = Tolerances{}.linalg);

/// exp(i * scale * h) for Hermitian h, computed through hermitian_eigen.
ComplexMatrix unitary_exp(const ComplexMatrix& h, double scale,
                          double tol = Tolerances{}.linalg);

bool is_hermitian(const ComplexMatrix& a, double tol = Tolerances{}.predicate);
bool is_unitary(const ComplexMatrix& a, double tol = Tolerances{}.predicate);
bool is_projection(const ComplexMatrix& a, double tol = Tolerances{}.predicate);

/// JSON wire format: {"rows": r, "cols": c, "entries": [[re, im], ...]} row-major.
std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const std::string& text);

}  // namespace grassvol
