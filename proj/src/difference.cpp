#include "varbvp/difference.hpp"

#include <cmath>
#include <stdexcept>

namespace varbvp {

double binomial(int n, int i) {
    if (i < 0 || i > n) return 0.0;
    if (i > n - i) i = n - i;
    double c = 1.0;
    for (int j = 1; j <= i; ++j) c = c * static_cast<double>(n - i + j) / static_cast<double>(j);
    return std::round(c);
}

std::vector<double> nth_diff(const ExtendedSequence& s, int m) {
    if (m < 0) throw std::invalid_argument("nth_diff: order must be nonnegative");
    if (m > s.n()) throw std::invalid_argument("nth_diff: order exceeds the extension width");
    const int lo = 1 - s.n();
    const int hi = s.interior_size();
    std::vector<double> out(static_cast<std::size_t>(hi - lo + 1), 0.0);
    for (int k = lo; k <= hi; ++k) {
        double acc = 0.0;
        for (int i = 0; i <= m; ++i) {
            const double sign = ((m - i) % 2 == 0) ? 1.0 : -1.0;
            acc += sign * binomial(m, i) * s.at(k + i);
        }
        out[static_cast<std::size_t>(k - lo)] = acc;
    }
    return out;
}

DifferenceMatrix build_operator_matrix(int interior_size, int n) {
    if (interior_size < 2) throw std::invalid_argument("build_operator_matrix: N >= 2 required");
    if (n < 1) throw std::invalid_argument("build_operator_matrix: n >= 1 required");
    DifferenceMatrix d;
    d.n = n;
    d.interior_size = interior_size;
    d.mat = Matrix(static_cast<std::size_t>(interior_size + n), static_cast<std::size_t>(interior_size));
    for (int row = 0; row < interior_size + n; ++row) {
        const int k = 1 - n + row;
        for (int col = 0; col < interior_size; ++col) {
            const int j = col + 1;
            const int i = j - k;
            if (i < 0 || i > n) continue;
            const double sign = ((n - i) % 2 == 0) ? 1.0 : -1.0;
            d.mat(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) = sign * binomial(n, i);
        }
    }
    return d;
}

Matrix weighted_gram(const DifferenceMatrix& d, const std::vector<double>& p) {
    const std::size_t rows = d.mat.rows();
    const std::size_t cols = d.mat.cols();
    if (p.size() != rows) throw std::invalid_argument("weighted_gram: p must have N + n entries");
    Matrix a(cols, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (p[r] == 0.0) continue;
        // Stencil rows have at most n+1 nonzeros; a dense pass is fine here.
        for (std::size_t i = 0; i < cols; ++i) {
            const double dri = d.mat(r, i);
            if (dri == 0.0) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                const double drj = d.mat(r, j);
                if (drj == 0.0) continue;
                a(i, j) += p[r] * dri * drj;
            }
        }
    }
    // Enforce exact symmetry against rounding in the accumulation order.
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = i + 1; j < cols; ++j) {
            const double v = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = v;
            a(j, i) = v;
        }
    return a;
}

SpectralBounds embedding_constants(int interior_size, int n) {
    const DifferenceMatrix d = build_operator_matrix(interior_size, n);
    const std::vector<double> ones(d.mat.rows(), 1.0);
    const Matrix gram = weighted_gram(d, ones);
    const std::vector<double> ev = symmetric_eigenvalues(gram);
    SpectralBounds b;
    b.lambda_min = ev.front();
    b.lambda_max = ev.back();
    b.upper_bound = std::pow(4.0, n);
    if (!(b.lambda_min > 0.0))
        throw std::runtime_error("embedding_constants: D^T D must be positive definite");
    if (b.lambda_max > b.upper_bound + 1e-9)
        throw std::runtime_error("embedding_constants: eigenvalue exceeds 4^n bound");
    return b;
}

}  // namespace varbvp
