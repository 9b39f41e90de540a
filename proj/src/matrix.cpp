#include "gridperturb/matrix.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "gridperturb/kernels.hpp"

namespace gridperturb {

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x) {
    if (x.size() != a.cols()) throw std::invalid_argument("matvec: size mismatch");
    std::vector<double> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        y[i] = kernels::dot(a.row(i), x.data(), a.cols());
    return y;
}

std::vector<double> matvec_transposed(const Matrix& a, const std::vector<double>& x) {
    if (x.size() != a.rows()) throw std::invalid_argument("matvec_transposed: size mismatch");
    std::vector<double> y(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        kernels::axpy(x[i], a.row(i), y.data(), a.cols());
    return y;
}

LuFactor::LuFactor(Matrix a) : lu_(std::move(a)), pivots_(lu_.rows()) {
    if (lu_.rows() != lu_.cols()) throw std::invalid_argument("LuFactor: matrix not square");
    const std::size_t n = lu_.rows();

    for (std::size_t j = 0; j < n; ++j) {
        double colsum = 0.0;
        for (std::size_t i = 0; i < n; ++i) colsum += std::fabs(lu_(i, j));
        norm1_ = std::max(norm1_, colsum);
    }

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::fabs(lu_(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::fabs(lu_(i, k));
            if (v > best) { best = v; piv = i; }
        }
        pivots_[k] = static_cast<int>(piv);
        if (best == 0.0) { singular_ = true; continue; }
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
        const double inv_pivot = 1.0 / lu_(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = lu_(i, k) * inv_pivot;
            lu_(i, k) = m;
            // eliminate the trailing row segment
            kernels::axpy(-m, lu_.row(k) + k + 1, lu_.row(i) + k + 1, n - k - 1);
        }
    }
}

std::vector<double> LuFactor::solve(const std::vector<double>& b) const {
    const std::size_t n = size();
    if (b.size() != n) throw std::invalid_argument("LuFactor::solve: size mismatch");
    if (singular_) throw SingularMatrixError("matrix is singular");

    std::vector<double> x = b;
    for (std::size_t k = 0; k < n; ++k) {
        std::swap(x[k], x[static_cast<std::size_t>(pivots_[k])]);
        // forward substitution, unit lower triangle
        if (k > 0) x[k] -= kernels::dot(lu_.row(k), x.data(), k);
    }
    for (std::size_t k = n; k-- > 0;) {
        x[k] -= kernels::dot(lu_.row(k) + k + 1, x.data() + k + 1, n - k - 1);
        x[k] /= lu_(k, k);
    }
    return x;
}

double LuFactor::condition_estimate() const {
    if (singular_) return std::numeric_limits<double>::infinity();
    const std::size_t n = size();
    if (n == 0) return 1.0;

    // Hager's estimator for ||A^{-1}||_1 via a few solves with A and A^T;
    // A is factored, A^T solves reuse the same factors on a transposed copy.
    Matrix at(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) at(i, j) = lu_(j, i);
    // Rebuild A from LU is wasteful; instead estimate with forward solves only:
    // iterate x <- A^{-1} y with sign vectors, tracking the 1-norm growth.
    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    double est = 0.0;
    for (int iter = 0; iter < 5; ++iter) {
        std::vector<double> y = solve(x);
        double norm = 0.0;
        for (double v : y) norm += std::fabs(v);
        if (norm <= est) break;
        est = norm;
        for (std::size_t i = 0; i < n; ++i)
            x[i] = (y[i] >= 0.0 ? 1.0 : -1.0) / static_cast<double>(n);
    }
    return est * norm1_;
}

}  // namespace gridperturb
