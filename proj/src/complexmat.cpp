#include "grassvol/complexmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace grassvol {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("from_rows: ragged rows");
        std::size_t j = 0;
        for (const auto& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix addition: shape mismatch");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix subtraction: shape mismatch");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(cplx scalar) const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * scalar;
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = std::conj(data_[i]);
    return out;
}

cplx ComplexMatrix::trace() const {
    if (!square()) throw std::invalid_argument("trace: non-square matrix");
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_norm() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const cplx& v) {
        return std::isfinite(v.real()) && std::isfinite(v.imag());
    });
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{0.0, 0.0}) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return out;
}

cplx det(const ComplexMatrix& a) {
    if (!a.square()) throw std::invalid_argument("det: non-square matrix");
    const std::size_t n = a.rows();
    ComplexMatrix lu = a;
    cplx d{1.0, 0.0};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(lu(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(lu(r, col));
            if (v > best) { best = v; pivot = r; }
        }
        if (best == 0.0) return {0.0, 0.0};
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(pivot, j), lu(col, j));
            d = -d;
        }
        d *= lu(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const cplx f = lu(r, col) / lu(col, col);
            for (std::size_t j = col; j < n; ++j) lu(r, j) -= f * lu(col, j);
        }
    }
    return d;
}

ComplexMatrix inverse(const ComplexMatrix& a) {
    if (!a.square()) throw std::invalid_argument("inverse: non-square matrix");
    const std::size_t n = a.rows();
    ComplexMatrix w = a;
    ComplexMatrix inv = ComplexMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(w(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(w(r, col));
            if (v > best) { best = v; pivot = r; }
        }
        if (best == 0.0) throw std::invalid_argument("inverse: singular matrix");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w(pivot, j), w(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const cplx p = w(col, col);
        for (std::size_t j = 0; j < n; ++j) { w(col, j) /= p; inv(col, j) /= p; }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const cplx f = w(r, col);
            if (f == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j) {
                w(r, j) -= f * w(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

namespace {

// One cyclic sweep of complex Jacobi rotations; returns the largest
// off-diagonal modulus seen before rotating.
double jacobi_sweep(ComplexMatrix& a, ComplexMatrix& v) {
    const std::size_t n = a.rows();
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const cplx apq = a(p, q);
            const double mag = std::abs(apq);
            off = std::max(off, mag);
            if (mag < 1e-300) continue;
            const cplx phase = apq / mag;  // a_pq = mag * phase
            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            const double tau = (aqq - app) / (2.0 * mag);
            const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                             (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            // Column rotation J restricted to columns (p,q):
            //   J_pp = c, J_pq = s*phase, J_qp = -s*conj(phase), J_qq = c,
            // chosen so (J^dagger A J)_pq = 0.
            const cplx jpq = s * phase;
            const cplx jqp = -s * std::conj(phase);
            for (std::size_t r = 0; r < n; ++r) {  // A <- A J
                const cplx arp = a(r, p), arq = a(r, q);
                a(r, p) = arp * c + arq * jqp;
                a(r, q) = arp * jpq + arq * c;
            }
            for (std::size_t col = 0; col < n; ++col) {  // A <- J^dagger A
                const cplx apc = a(p, col), aqc = a(q, col);
                a(p, col) = c * apc + std::conj(jqp) * aqc;
                a(q, col) = std::conj(jpq) * apc + c * aqc;
            }
            for (std::size_t r = 0; r < n; ++r) {  // V <- V J
                const cplx vrp = v(r, p), vrq = v(r, q);
                v(r, p) = vrp * c + vrq * jqp;
                v(r, q) = vrp * jpq + vrq * c;
            }
        }
    }
    return off;
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& a, double tol) {
    if (!a.square()) throw std::invalid_argument("hermitian_eigen: non-square matrix");
    if (!is_hermitian(a, tol)) throw std::invalid_argument("hermitian_eigen: input not Hermitian");
    const std::size_t n = a.rows();
    ComplexMatrix work = a;
    ComplexMatrix vecs = ComplexMatrix::identity(n);
    const double scale = std::max(a.max_norm(), 1.0);
    for (int sweep = 0; sweep < 100; ++sweep) {
        const double off = jacobi_sweep(work, vecs);
        if (off < 1e-15 * scale) break;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return work(i, i).real() < work(j, j).real();
    });
    HermitianEigen out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = work(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = vecs(i, order[j]);
    }
    return out;
}

ComplexMatrix unitary_exp(const ComplexMatrix& h, double scale, double tol) {
    const HermitianEigen eig = hermitian_eigen(h, tol);
    const std::size_t n = h.rows();
    ComplexMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
        d(i, i) = std::exp(cplx{0.0, scale * eig.eigenvalues[i]});
    return eig.eigenvectors * d * eig.eigenvectors.adjoint();
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    if (!a.square()) return false;
    return (a - a.adjoint()).max_norm() <= tol;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
    if (!a.square()) return false;
    return (a.adjoint() * a - ComplexMatrix::identity(a.rows())).max_norm() <= tol;
}

bool is_projection(const ComplexMatrix& a, double tol) {
    if (!a.square()) return false;
    return (a * a - a).max_norm() <= tol && (a - a.adjoint()).max_norm() <= tol;
}

std::string matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    auto entries = nlohmann::json::array();
    for (const auto& v : m.data()) entries.push_back({v.real(), v.imag()});
    j["entries"] = std::move(entries);
    return j.dump();
}

ComplexMatrix matrix_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows * cols)
        throw std::invalid_argument("matrix_from_json: entries length != rows*cols");
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i)
        m.data()[i] = cplx{entries[i][0].get<double>(), entries[i][1].get<double>()};
    if (!m.all_finite()) throw std::invalid_argument("matrix_from_json: non-finite entry");
    return m;
}

}  // namespace grassvol
