#include "grassvol/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "grassvol/rng.hpp"

namespace grassvol {

bool GrassmannPoint::valid(double tol) const {
    if (p.rows() != n || p.cols() != n) return false;
    if (!is_projection(p, tol)) return false;
    return std::abs(p.trace() - cplx(static_cast<double>(k), 0.0)) <= tol * static_cast<double>(n);
}

ComplexMatrix special_projection(std::size_t k, std::size_t n) {
    ComplexMatrix e(n, n);
    for (std::size_t i = 0; i < k; ++i) e(i, i) = 1.0;
    return e;
}

GrassmannPoint point_from_basis(const ComplexMatrix& v, double tol) {
    const std::size_t n = v.rows();
    const std::size_t k = v.cols();
    if ((v.adjoint() * v - ComplexMatrix::identity(k)).max_norm() > tol)
        throw std::invalid_argument("point_from_basis: columns not orthonormal");
    return GrassmannPoint{n, k, v * v.adjoint()};
}

GrassmannPoint chart_point(const OikeChart& chart) {
    const std::size_t n = chart.n;
    const std::size_t k = chart.k;
    if (chart.z.rows() != n - k || chart.z.cols() != k)
        throw std::invalid_argument("chart_point: Z has wrong shape");
    if (!is_unitary(chart.base))
        throw std::invalid_argument("chart_point: base is not unitary");
    // X = [[1_k, -Z^dagger], [Z, 1_{n-k}]]; always invertible since
    // det X = det(1_k + Z^dagger Z) >= 1.
    ComplexMatrix x = ComplexMatrix::identity(n);
    const ComplexMatrix zdag = chart.z.adjoint();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n - k; ++j) x(i, k + j) = -zdag(i, j);
    for (std::size_t i = 0; i < n - k; ++i)
        for (std::size_t j = 0; j < k; ++j) x(k + i, j) = chart.z(i, j);
    const ComplexMatrix ek = special_projection(k, n);
    const ComplexMatrix inner = x * ek * inverse(x);
    return GrassmannPoint{n, k, chart.base * inner * chart.base.adjoint()};
}

double det_lambda(const ComplexMatrix& z) {
    const std::size_t k = z.cols();
    const ComplexMatrix lambda = ComplexMatrix::identity(k) + z.adjoint() * z;
    return det(lambda).real();
}

double volume_density(const ComplexMatrix& z, std::size_t n) {
    return std::pow(det_lambda(z), -static_cast<double>(n));
}

double sphere_volume(unsigned k) {
    if (k == 0) throw std::invalid_argument("sphere_volume: k must be >= 1");
    double fact = 1.0;
    for (unsigned j = 2; j < k; ++j) fact *= static_cast<double>(j);
    return 2.0 * std::pow(M_PI, static_cast<double>(k)) / fact;
}

double unitary_volume(unsigned n) {
    if (n == 0) throw std::invalid_argument("unitary_volume: n must be >= 1");
    // Literal sphere product, so the cross-check against sphere_volume is
    // exact rather than merely close.
    double v = 1.0;
    for (unsigned k = 1; k <= n; ++k) v *= sphere_volume(k);
    return v;
}

double grassmann_volume(unsigned k, unsigned n) {
    if (k > n) throw std::invalid_argument("grassmann_volume: k out of range");
    if (k == 0 || k == n) return 1.0;  // single-point manifolds
    k = std::min(k, n - k);  // canonicalize so the k <-> n-k symmetry is bitwise
    double num = 1.0, fact = 1.0;  // 0! 1! ... (k-1)!
    for (unsigned j = 1; j < k; ++j) {
        fact *= static_cast<double>(j);
        num *= fact;
    }
    double den = 1.0;  // (n-k)! ... (n-1)!
    fact = 1.0;
    for (unsigned j = 1; j <= n - 1; ++j) {
        fact *= static_cast<double>(j);
        if (j >= n - k) den *= fact;
    }
    return num / den * std::pow(M_PI, static_cast<double>(k) * (n - k));
}

std::uint64_t chart_count(unsigned k, unsigned n) {
    if (k > n) throw std::invalid_argument("chart_count: k out of range");
    std::uint64_t c = 1;
    for (unsigned j = 1; j <= std::min(k, n - k); ++j)
        c = c * (n - j + 1) / j;
    return c;
}

namespace {

constexpr std::uint64_t kMcBlock = 1u << 16;

struct BlockSum {
    double sum = 0.0;
    double sumsq = 0.0;
};

// One MC block: samples block_size draws from the stream keyed by
// (seed, block index) and accumulates the importance weight.
//
// The integrand depends on Z only through the m = min(n-k, k) eigenvalues
// lambda_i of Z^dagger Z, so the unitary factors are integrated out
// analytically and only the spectrum is sampled. With p = n-k, q = k,
// d = |p-q|, Lebesgue measure on M(p,q;C) pushes forward to
//   K * Delta(lambda)^2 * prod lambda_i^d  on (0,inf)^m,
// where Delta is the Vandermonde determinant and the constant K follows
// from the Gaussian calibration integral (tr-exponential on both sides):
//   K = pi^{pq} / prod_{j=0}^{m-1} (j+1)! (d+j)!.
// Each lambda is drawn as u/(1-u) with u uniform, i.e. with density
// (1+lambda)^{-2}, giving the bounded weight
//   w = K * Delta^2 * prod lambda_i^d (1+lambda_i)^{-(n-2)}.
// Total polynomial degree in any blow-up direction is <= 0, so the weight
// stays bounded and the estimator has finite variance for every (k, n).
BlockSum mc_block(unsigned k, unsigned n, std::uint64_t seed,
                  std::uint64_t block, std::uint64_t block_size) {
    CounterRng rng(seed, block);
    const unsigned p = n - k, q = k;
    const unsigned m = std::min(p, q), d = p > q ? p - q : q - p;
    double scale = std::pow(M_PI, static_cast<double>(p) * q);
    double fact = 1.0;       // j!
    double fact_d = 1.0;     // d!
    for (unsigned j = 1; j <= d; ++j) fact_d *= static_cast<double>(j);
    for (unsigned j = 0; j < m; ++j) {
        if (j > 0) {
            fact *= static_cast<double>(j);
            fact_d *= static_cast<double>(d + j);
        }
        scale /= fact * static_cast<double>(j + 1) * fact_d;
    }
    std::vector<double> lambda(m);
    BlockSum acc;
    for (std::uint64_t s = 0; s < block_size; ++s) {
        double w = scale;
        for (unsigned i = 0; i < m; ++i) {
            const double u = rng.next_open01();
            lambda[i] = u / (1.0 - u);
            w *= std::pow(lambda[i], static_cast<double>(d)) *
                 std::pow(1.0 + lambda[i], -(static_cast<double>(n) - 2.0));
        }
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = i + 1; j < m; ++j) {
                const double diff = lambda[i] - lambda[j];
                w *= diff * diff;
            }
        acc.sum += w;
        acc.sumsq += w * w;
    }
    return acc;
}

}  // namespace

VolumeEstimate mc_volume(unsigned k, unsigned n, std::uint64_t samples,
                         std::uint64_t seed, unsigned workers) {
    if (k == 0 || k >= n) throw std::invalid_argument("mc_volume: need 1 <= k <= n-1");
    if (samples == 0) throw std::invalid_argument("mc_volume: need samples >= 1");
    const std::uint64_t blocks = (samples + kMcBlock - 1) / kMcBlock;
    std::vector<BlockSum> sums(blocks);
    auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t b = begin; b < end; ++b) {
            const std::uint64_t size =
                (b + 1 == blocks) ? samples - b * kMcBlock : kMcBlock;
            sums[b] = mc_block(k, n, seed, b, size);
        }
    };
    if (workers <= 1 || blocks <= 1) {
        run_range(0, blocks);
    } else {
        const unsigned nthreads = std::min<std::uint64_t>(workers, blocks);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) {
            const std::uint64_t begin = blocks * t / nthreads;
            const std::uint64_t end = blocks * (t + 1) / nthreads;
            pool.emplace_back(run_range, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    double sum = 0.0, sumsq = 0.0;  // reduced in block order
    for (const auto& b : sums) { sum += b.sum; sumsq += b.sumsq; }
    const double mean = sum / static_cast<double>(samples);
    double stderr_ = 0.0;
    if (samples > 1) {
        const double var =
            (sumsq - sum * sum / static_cast<double>(samples)) /
            static_cast<double>(samples - 1);
        stderr_ = std::sqrt(std::max(var, 0.0) / static_cast<double>(samples));
    }
    return VolumeEstimate{mean, stderr_, samples, seed};
}

namespace {

// 4-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGlNode[4] = {-0.8611363115940526, -0.3399810435848563,
                               0.3399810435848563, 0.8611363115940526};
constexpr double kGlWeight[4] = {0.3478548451374538, 0.6521451548625461,
                                 0.6521451548625461, 0.3478548451374538};

template <typename F>
double composite_gl01(F&& f, unsigned panels) {
    double total = 0.0;
    const double h = 1.0 / panels;
    for (unsigned p = 0; p < panels; ++p) {
        const double a = p * h;
        double acc = 0.0;
        for (int q = 0; q < 4; ++q)
            acc += kGlWeight[q] * f(a + 0.5 * h * (kGlNode[q] + 1.0));
        total += 0.5 * h * acc;
    }
    return total;
}

}  // namespace

double projective_volume_quadrature(unsigned n, unsigned grid) {
    if (n < 2) throw std::invalid_argument("projective_volume_quadrature: n must be >= 2");
    if (grid < 2) throw std::invalid_argument("projective_volume_quadrature: grid must be >= 2");
    // Unbounded xi_1 integral of xi^{n-2}/(1+xi)^n, mapped by xi = s/(1-s).
    const double head = composite_gl01(
        [n](double s) {
            const double xi = s / (1.0 - s);
            const double jac = 1.0 / ((1.0 - s) * (1.0 - s));
            return std::pow(xi, static_cast<double>(n) - 2.0) *
                   std::pow(1.0 + xi, -static_cast<double>(n)) * jac;
        },
        grid);
    double value = std::pow(M_PI, static_cast<double>(n) - 1.0) * head;
    for (unsigned j = 2; j + 1 < n; ++j) {
        const double expo = static_cast<double>(n) - 1.0 - j;
        value *= composite_gl01([expo](double s) { return std::pow(s, expo); }, grid);
    }
    return value;
}

}  // namespace grassvol
