#pragma once

#include <cstddef>
#include <vector>

namespace varbvp {

/// Dense row-major matrix of doubles. Sized for desk-scale problems.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<double>& data() const { return a_; }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> a_;
};

std::vector<double> matvec(const Matrix& m, const std::vector<double>& x);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// ascending. Throws std::runtime_error when the sweep limit is exhausted
/// before the off-diagonal mass drops below the tolerance.
std::vector<double> symmetric_eigenvalues(Matrix a, double tol = 1e-13);

/// Solves m*x = b by Gaussian elimination with partial pivoting.
/// Returns an empty vector when the matrix is numerically singular.
std::vector<double> solve_linear(Matrix m, std::vector<double> b);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& v);
double norm_inf(const std::vector<double>& v);

}  // namespace varbvp
