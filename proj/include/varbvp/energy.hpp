#pragma once

#include <optional>
#include <string>
#include <vector>

#include "varbvp/difference.hpp"
#include "varbvp/expression.hpp"
#include "varbvp/linalg.hpp"
#include "varbvp/sequence.hpp"

namespace varbvp {

/// One problem instance: order parameter n, interior length N, the weight
/// sequence p on 1-n .. N and the nonlinearity f(k, x). Immutable; the
/// Gram matrix of the quadratic part and the x-derivative of f are
/// assembled once at construction.
class ProblemSpec {
public:
    ProblemSpec(int n, int interior_size, std::vector<double> p, Expression f,
                std::string description = "");

    int n() const { return n_; }
    int interior_size() const { return interior_size_; }

    /// Weight at index k, k in 1-n .. N.
    double p_at(int k) const { return p_[static_cast<std::size_t>(k - (1 - n_))]; }
    const std::vector<double>& p() const { return p_; }
    double p_min() const { return p_min_; }
    double p_max() const { return p_max_; }

    const Expression& f() const { return f_; }
    const Expression& f_prime() const { return f_prime_; }
    const Antiderivative& F() const { return F_; }

    /// diag(f_x') is only a.e. exact when abs encloses x in f.
    bool hessian_is_approximate() const { return f_.abs_encloses_x(); }

    const Matrix& gram() const { return gram_; }
    const std::string& description() const { return description_; }

    /// Problem with p -> -p and f -> -f, whose energy is the negation of
    /// this one's. Critical points coincide.
    ProblemSpec negated() const;

private:
    int n_;
    int interior_size_;
    std::vector<double> p_;
    Expression f_;
    std::string description_;
    Expression f_prime_;
    Antiderivative F_;
    Matrix gram_;
    double p_min_ = 0.0;
    double p_max_ = 0.0;
};

struct EnergyReport {
    double J = 0.0;
    std::vector<double> grad;
    double grad_norm_inf = 0.0;
    double residual_norm_inf = 0.0;
};

/// J(x) = 1/2 x^T A x - sum_k F(k, x(k)). The potential terms with k <= 0
/// vanish because x is zero there and F(k, 0) = 0.
double energy_J(const ProblemSpec& prob, const InteriorVector& x);

/// A x - (f(1, x(1)), ..., f(N, x(N))), the coefficient vector of the
/// Gateaux derivative of J at x.
std::vector<double> gradient(const ProblemSpec& prob, const InteriorVector& x);

/// A - diag(f_x'(k, x(k))).
Matrix hessian(const ProblemSpec& prob, const InteriorVector& x);

/// Componentwise left side of the difference equation at x, computed by
/// composing difference stencils with the weighted inner difference. This
/// path is independent of the Gram-matrix gradient; the two are tied by
/// gradient(k) = (-1)^n residual(k).
std::vector<double> residual(const ProblemSpec& prob, const InteriorVector& x);

EnergyReport energy_report(const ProblemSpec& prob, const InteriorVector& x);

}  // namespace varbvp
