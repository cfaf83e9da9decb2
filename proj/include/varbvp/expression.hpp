#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace varbvp {

/// Syntax error with the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_ = 0;
};

/// Evaluation failure (overflow to infinity, zero divisor, quadrature
/// breakdown).
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
struct ExprNode;
}

/// Immutable arithmetic expression in the variables k and x.
///
/// The input language: + - * / ^ with standard precedence, unary minus,
/// nonnegative integer exponents, and the functions sin, cos, exp, tanh,
/// abs. Divisors may not depend on x (checked at parse time), so every
/// well-formed expression evaluates to a finite real wherever no overflow
/// occurs. Differentiation of abs uses sign with sign(0) = 0; sign only
/// appears in derived expressions, never in parsed input.
class Expression {
public:
    Expression() = default;

    double eval(int k, double x) const;

    /// Symbolic derivative with respect to x, constant-folded.
    Expression diff_x() const;

    /// True when x never occurs inside a function application (divisors
    /// are x-free by construction), so the x-antiderivative has a closed
    /// form.
    bool polynomial_in_x() const;

    /// True when an abs application encloses x somewhere in the tree;
    /// second derivatives are then only approximate at the kink.
    bool abs_encloses_x() const;

    /// True when the expression does not mention x at all.
    bool independent_of_x() const;

    std::string to_string() const;

    bool valid() const { return root_ != nullptr; }

    explicit Expression(std::shared_ptr<const detail::ExprNode> root) : root_(std::move(root)) {}
    const detail::ExprNode* root() const { return root_.get(); }
    const std::shared_ptr<const detail::ExprNode>& root_ptr() const { return root_; }

private:
    std::shared_ptr<const detail::ExprNode> root_;
};

Expression parse_expression(const std::string& text);

double eval_f(const Expression& e, int k, double x);

/// Integral of f(k, .) from 0 to s. Polynomial expressions integrate
/// term-wise and exactly; everything else goes through adaptive Simpson
/// quadrature to 1e-10 absolute accuracy.
class Antiderivative {
public:
    explicit Antiderivative(Expression f);

    bool closed_form() const { return closed_form_; }
    double operator()(int k, double s) const;

    static constexpr double kQuadratureTol = 1e-10;
    static constexpr int kMaxDepth = 40;

private:
    Expression f_;
    bool closed_form_ = false;
};

double antiderivative_F(const Expression& e, int k, double s);

/// Negates an expression (used to mirror a problem through J -> -J).
Expression negate(const Expression& e);

}  // namespace varbvp
