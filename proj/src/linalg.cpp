#include "varbvp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace varbvp {

std::vector<double> matvec(const Matrix& m, const std::vector<double>& x) {
    if (x.size() != m.cols()) throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<double> y(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

std::vector<double> symmetric_eigenvalues(Matrix a, double tol) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("symmetric_eigenvalues: matrix not square");
    if (n == 0) return {};
    if (n == 1) return {a(0, 0)};

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
    if (scale == 0.0) return std::vector<double>(n, 0.0);
    const double thresh = tol * scale;

    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= thresh) {
            std::vector<double> ev(n);
            for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
            std::sort(ev.begin(), ev.end());
            return ev;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= thresh * 1e-3) continue;
                const double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
                // Smaller-magnitude root of t^2 + 2*theta*t - 1 = 0.
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a(i, p);
                    const double aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const double apj = a(p, j);
                    const double aqj = a(q, j);
                    a(p, j) = c * apj - s * aqj;
                    a(q, j) = s * apj + c * aqj;
                }
            }
        }
    }
    throw std::runtime_error("symmetric_eigenvalues: Jacobi sweeps did not converge");
}

std::vector<double> solve_linear(Matrix m, std::vector<double> b) {
    const std::size_t n = m.rows();
    if (n != m.cols() || b.size() != n) throw std::invalid_argument("solve_linear: dimension mismatch");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
        if (std::abs(m(piv, col)) < 1e-300) return {};
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(piv, j));
            std::swap(b[col], b[piv]);
        }
        const double d = m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = m(r, col) / d;
            if (factor == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) m(r, j) -= factor * m(col, j);
            b[r] -= factor * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= m(i, j) * x[j];
        x[i] = s / m(i, i);
        if (!std::isfinite(x[i])) return {};
    }
    return x;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

double norm_inf(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace varbvp
