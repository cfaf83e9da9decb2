#include "varbvp/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace varbvp {

ProblemSpec::ProblemSpec(int n, int interior_size, std::vector<double> p, Expression f,
                         std::string description)
    : n_(n),
      interior_size_(interior_size),
      p_(std::move(p)),
      f_(std::move(f)),
      description_(std::move(description)),
      f_prime_(f_.diff_x()),
      F_(f_) {
    if (interior_size_ < 2) throw std::invalid_argument("ProblemSpec: N >= 2 required");
    if (n_ < 1) throw std::invalid_argument("ProblemSpec: n >= 1 required");
    if (p_.size() != static_cast<std::size_t>(interior_size_ + n_))
        throw std::invalid_argument("ProblemSpec: p must have N + n entries");
    for (double v : p_)
        if (!std::isfinite(v)) throw std::invalid_argument("ProblemSpec: p must be finite");
    if (!f_.valid()) throw std::invalid_argument("ProblemSpec: f must be a parsed expression");
    p_min_ = *std::min_element(p_.begin(), p_.end());
    p_max_ = *std::max_element(p_.begin(), p_.end());
    gram_ = weighted_gram(build_operator_matrix(interior_size_, n_), p_);
}

ProblemSpec ProblemSpec::negated() const {
    std::vector<double> np(p_.size());
    for (std::size_t i = 0; i < p_.size(); ++i) np[i] = -p_[i];
    return ProblemSpec(n_, interior_size_, std::move(np), negate(f_), description_);
}

double energy_J(const ProblemSpec& prob, const InteriorVector& x) {
    if (x.size() != prob.interior_size()) throw std::invalid_argument("energy_J: dimension mismatch");
    const std::vector<double> ax = matvec(prob.gram(), x.values());
    double quad = 0.0;
    for (int i = 0; i < x.size(); ++i) quad += x.values()[static_cast<std::size_t>(i)] * ax[static_cast<std::size_t>(i)];
    double pot = 0.0;
    for (int k = 1; k <= x.size(); ++k) pot += prob.F()(k, x.at(k));
    return 0.5 * quad - pot;
}

std::vector<double> gradient(const ProblemSpec& prob, const InteriorVector& x) {
    if (x.size() != prob.interior_size())
        throw std::invalid_argument("gradient: dimension mismatch");
    std::vector<double> g = matvec(prob.gram(), x.values());
    for (int k = 1; k <= x.size(); ++k) g[static_cast<std::size_t>(k - 1)] -= prob.f().eval(k, x.at(k));
    return g;
}

Matrix hessian(const ProblemSpec& prob, const InteriorVector& x) {
    if (x.size() != prob.interior_size()) throw std::invalid_argument("hessian: dimension mismatch");
    Matrix h = prob.gram();
    for (int k = 1; k <= x.size(); ++k) {
        const std::size_t i = static_cast<std::size_t>(k - 1);
        h(i, i) -= prob.f_prime().eval(k, x.at(k));
    }
    return h;
}

std::vector<double> residual(const ProblemSpec& prob, const InteriorVector& x) {
    if (x.size() != prob.interior_size())
        throw std::invalid_argument("residual: dimension mismatch");
    const int n = prob.n();
    const int N = prob.interior_size();
    const ExtendedSequence xt = extend(x, n);
    // Inner weighted differences g(k) = p(k) * (D^n x)(k) on 1-n .. N.
    const std::vector<double> dn = nth_diff(xt, n);
    std::vector<double> g(dn.size());
    for (int k = 1 - n; k <= N; ++k) {
        const std::size_t i = static_cast<std::size_t>(k - (1 - n));
        g[i] = prob.p_at(k) * dn[i];
    }
    const double parity = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^(n+1)
    std::vector<double> r(static_cast<std::size_t>(N), 0.0);
    for (int k = 1; k <= N; ++k) {
        double acc = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double sign = ((n - i) % 2 == 0) ? 1.0 : -1.0;
            acc += sign * binomial(n, i) * g[static_cast<std::size_t>(k - n + i - (1 - n))];
        }
        r[static_cast<std::size_t>(k - 1)] = acc + parity * prob.f().eval(k, x.at(k));
    }
    return r;
}

EnergyReport energy_report(const ProblemSpec& prob, const InteriorVector& x) {
    EnergyReport rep;
    rep.J = energy_J(prob, x);
    rep.grad = gradient(prob, x);
    rep.grad_norm_inf = norm_inf(rep.grad);
    rep.residual_norm_inf = norm_inf(residual(prob, x));
    return rep;
}

}  // namespace varbvp
