#pragma once

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace rbfn {

struct LeastSquaresSolution {
    Eigen::VectorXd x;
    double residual_norm = 0.0;
    Eigen::Index rank = 0;
};

/// Minimum-norm least squares via SVD. Singular values below
/// rank_tolerance * sigma_max are truncated.
inline LeastSquaresSolution lstsq(const Eigen::MatrixXd& A, const Eigen::VectorXd& y,
                                  double rank_tolerance = 1e-10) {
    if (A.rows() != y.size())
        throw std::invalid_argument("lstsq: dimension mismatch");
    Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(rank_tolerance);
    LeastSquaresSolution sol;
    sol.x = svd.solve(y);
    sol.rank = svd.rank();
    sol.residual_norm = (A * sol.x - y).norm();
    return sol;
}

/// Roots of a polynomial given coefficients highest degree first, via the
/// eigenvalues of the companion matrix.
inline std::vector<std::complex<double>> poly_roots(const Eigen::VectorXd& coeffs) {
    const Eigen::Index deg = coeffs.size() - 1;
    if (deg < 1) throw std::invalid_argument("poly_roots: degree must be >= 1");
    if (coeffs[0] == 0.0 || !coeffs.allFinite())
        throw std::invalid_argument("poly_roots: leading coefficient must be nonzero");
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    companion.diagonal(-1).setOnes();
    // monic normalization: p(z) = z^d + c_1 z^{d-1} + ... + c_d
    for (Eigen::Index i = 0; i < deg; ++i)
        companion(i, deg - 1) = -coeffs[deg - i] / coeffs[0];
    Eigen::EigenSolver<Eigen::MatrixXd> eig(companion, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots(deg);
    for (Eigen::Index i = 0; i < deg; ++i) roots[i] = eig.eigenvalues()[i];
    return roots;
}

inline std::complex<double> poly_eval(const Eigen::VectorXd& coeffs, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) acc = acc * z + coeffs[i];
    return acc;
}

/// L-point circular convolution with a 2-tap kernel:
/// y[k] = h[0]*x[k] + h[1]*x[(k-1) mod L].
inline Eigen::VectorXd circ_conv(const std::array<double, 2>& h, const Eigen::VectorXd& x) {
    const Eigen::Index n = x.size();
    if (n < 1) throw std::invalid_argument("circ_conv: empty input");
    Eigen::VectorXd out(n);
    for (Eigen::Index k = 0; k < n; ++k)
        out[k] = h[0] * x[k] + h[1] * x[(k - 1 + n) % n];
    return out;
}

/// Central finite difference of order 1 or 2.
template <class F>
double finite_difference(F&& f, double x, int order, double step) {
    if (step <= 0.0) throw std::invalid_argument("finite_difference: step must be positive");
    if (order == 1) return (f(x + step) - f(x - step)) / (2.0 * step);
    if (order == 2) return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
    throw std::invalid_argument("finite_difference: order must be 1 or 2");
}

/// Explicitly seeded uniform generator. The engine is std::mt19937_64 (an
/// algorithm fully pinned by the C++ standard); the [0,1) mapping uses the
/// top 53 bits so sequences are identical on every platform.
class UniformRng {
  public:
    explicit UniformRng(std::uint64_t seed) : engine_(seed) {}

    double unit() {  // in [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double next(double lo, double hi) {
        if (lo > hi) throw std::invalid_argument("UniformRng: lo > hi");
        return lo + unit() * (hi - lo);
    }

  private:
    std::mt19937_64 engine_;
};

inline Eigen::VectorXd seeded_uniform(std::uint64_t seed, double lo, double hi, Eigen::Index n) {
    UniformRng rng(seed);
    Eigen::VectorXd out(n);
    for (Eigen::Index i = 0; i < n; ++i) out[i] = rng.next(lo, hi);
    return out;
}

}  // namespace rbfn
