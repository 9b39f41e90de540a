#pragma once
// Dense row-major matrices sized for desk-scale grids (N of order 100).

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gridperturb {

class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// y = A x
std::vector<double> matvec(const Matrix& a, const std::vector<double>& x);
// y = A^T x  (A symmetric callers may use matvec directly)
std::vector<double> matvec_transposed(const Matrix& a, const std::vector<double>& x);

class SingularMatrixError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// LU factorization with partial pivoting.
class LuFactor {
  public:
    explicit LuFactor(Matrix a);

    std::size_t size() const { return lu_.rows(); }
    // Solves A x = b; throws SingularMatrixError on an exactly singular pivot.
    std::vector<double> solve(const std::vector<double>& b) const;
    // One-norm condition estimate (Hager-style), infinite for singular A.
    double condition_estimate() const;

  private:
    Matrix lu_;
    std::vector<int> pivots_;
    double norm1_ = 0.0;
    bool singular_ = false;
};

}  // namespace gridperturb
