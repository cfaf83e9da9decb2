#include "varbvp/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <utility>
#include <vector>

namespace varbvp {
namespace detail {

enum class Kind { number, var_x, var_k, add, sub, mul, div, neg, pow, call };
enum class Func { sin, cos, exp, tanh, abs, sign };

struct ExprNode {
    Kind kind;
    double value = 0.0;     // number
    int exponent = 0;       // pow
    Func func = Func::sin;  // call
    std::shared_ptr<const ExprNode> a, b;
};

using NodePtr = std::shared_ptr<const ExprNode>;

namespace {

NodePtr make_number(double v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::number;
    n->value = v;
    return n;
}

NodePtr make_var(Kind k) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    return n;
}

bool is_number(const NodePtr& n, double v) { return n->kind == Kind::number && n->value == v; }

NodePtr make_binary(Kind k, NodePtr a, NodePtr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

NodePtr make_neg(NodePtr a);

NodePtr make_add(NodePtr a, NodePtr b) {
    if (a->kind == Kind::number && b->kind == Kind::number) return make_number(a->value + b->value);
    if (is_number(a, 0.0)) return b;
    if (is_number(b, 0.0)) return a;
    return make_binary(Kind::add, std::move(a), std::move(b));
}

NodePtr make_sub(NodePtr a, NodePtr b) {
    if (a->kind == Kind::number && b->kind == Kind::number) return make_number(a->value - b->value);
    if (is_number(b, 0.0)) return a;
    if (is_number(a, 0.0)) return make_neg(std::move(b));
    return make_binary(Kind::sub, std::move(a), std::move(b));
}

NodePtr make_mul(NodePtr a, NodePtr b) {
    if (a->kind == Kind::number && b->kind == Kind::number) return make_number(a->value * b->value);
    if (is_number(a, 0.0) || is_number(b, 0.0)) return make_number(0.0);
    if (is_number(a, 1.0)) return b;
    if (is_number(b, 1.0)) return a;
    return make_binary(Kind::mul, std::move(a), std::move(b));
}

NodePtr make_div(NodePtr a, NodePtr b) {
    if (a->kind == Kind::number && b->kind == Kind::number && b->value != 0.0)
        return make_number(a->value / b->value);
    if (is_number(a, 0.0)) return make_number(0.0);
    if (is_number(b, 1.0)) return a;
    return make_binary(Kind::div, std::move(a), std::move(b));
}

NodePtr make_neg(NodePtr a) {
    if (a->kind == Kind::number) return make_number(-a->value);
    if (a->kind == Kind::neg) return a->a;
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::neg;
    n->a = std::move(a);
    return n;
}

NodePtr make_pow(NodePtr base, int e) {
    if (e == 0) return make_number(1.0);
    if (e == 1) return base;
    if (base->kind == Kind::number) {
        double v = 1.0;
        for (int i = 0; i < e; ++i) v *= base->value;
        return make_number(v);
    }
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::pow;
    n->exponent = e;
    n->a = std::move(base);
    return n;
}

NodePtr make_call(Func f, NodePtr arg) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::call;
    n->func = f;
    n->a = std::move(arg);
    return n;
}

bool contains_x(const ExprNode* n) {
    if (!n) return false;
    if (n->kind == Kind::var_x) return true;
    return contains_x(n->a.get()) || contains_x(n->b.get());
}

bool contains_k(const ExprNode* n) {
    if (!n) return false;
    if (n->kind == Kind::var_k) return true;
    return contains_k(n->a.get()) || contains_k(n->b.get());
}

double eval_node(const ExprNode* n, int k, double x) {
    switch (n->kind) {
        case Kind::number: return n->value;
        case Kind::var_x: return x;
        case Kind::var_k: return static_cast<double>(k);
        case Kind::add: return eval_node(n->a.get(), k, x) + eval_node(n->b.get(), k, x);
        case Kind::sub: return eval_node(n->a.get(), k, x) - eval_node(n->b.get(), k, x);
        case Kind::mul: return eval_node(n->a.get(), k, x) * eval_node(n->b.get(), k, x);
        case Kind::div: {
            const double den = eval_node(n->b.get(), k, x);
            if (den == 0.0) throw EvalError("division by zero divisor");
            return eval_node(n->a.get(), k, x) / den;
        }
        case Kind::neg: return -eval_node(n->a.get(), k, x);
        case Kind::pow: {
            double base = eval_node(n->a.get(), k, x);
            double r = 1.0;
            int e = n->exponent;
            while (e > 0) {
                if (e & 1) r *= base;
                base *= base;
                e >>= 1;
            }
            return r;
        }
        case Kind::call: {
            const double u = eval_node(n->a.get(), k, x);
            switch (n->func) {
                case Func::sin: return std::sin(u);
                case Func::cos: return std::cos(u);
                case Func::exp: return std::exp(u);
                case Func::tanh: return std::tanh(u);
                case Func::abs: return std::abs(u);
                case Func::sign: return u > 0.0 ? 1.0 : (u < 0.0 ? -1.0 : 0.0);
            }
        }
    }
    throw EvalError("corrupt expression node");
}

NodePtr diff_node(const NodePtr& n) {
    switch (n->kind) {
        case Kind::number:
        case Kind::var_k: return make_number(0.0);
        case Kind::var_x: return make_number(1.0);
        case Kind::add: return make_add(diff_node(n->a), diff_node(n->b));
        case Kind::sub: return make_sub(diff_node(n->a), diff_node(n->b));
        case Kind::mul:
            return make_add(make_mul(diff_node(n->a), n->b), make_mul(n->a, diff_node(n->b)));
        case Kind::div:
            // Divisors are x-free by the parse-time rule, so (u/v)' = u'/v.
            return make_div(diff_node(n->a), n->b);
        case Kind::neg: return make_neg(diff_node(n->a));
        case Kind::pow:
            return make_mul(make_number(static_cast<double>(n->exponent)),
                            make_mul(make_pow(n->a, n->exponent - 1), diff_node(n->a)));
        case Kind::call: {
            NodePtr inner = diff_node(n->a);
            switch (n->func) {
                case Func::sin: return make_mul(make_call(Func::cos, n->a), inner);
                case Func::cos: return make_mul(make_neg(make_call(Func::sin, n->a)), inner);
                case Func::exp: return make_mul(make_call(Func::exp, n->a), inner);
                case Func::tanh:
                    return make_mul(
                        make_sub(make_number(1.0), make_pow(make_call(Func::tanh, n->a), 2)),
                        inner);
                case Func::abs: return make_mul(make_call(Func::sign, n->a), inner);
                case Func::sign: return make_number(0.0);
            }
        }
    }
    throw EvalError("corrupt expression node");
}

bool polynomial_node(const ExprNode* n) {
    if (!n) return true;
    if (n->kind == Kind::call && contains_x(n->a.get())) return false;
    return polynomial_node(n->a.get()) && polynomial_node(n->b.get());
}

bool abs_over_x_node(const ExprNode* n) {
    if (!n) return false;
    if (n->kind == Kind::call && n->func == Func::abs && contains_x(n->a.get())) return true;
    return abs_over_x_node(n->a.get()) || abs_over_x_node(n->b.get());
}

// ---- printing ----------------------------------------------------------

int precedence(const ExprNode* n) {
    switch (n->kind) {
        case Kind::add:
        case Kind::sub: return 1;
        case Kind::mul:
        case Kind::div: return 2;
        case Kind::neg: return 3;
        case Kind::pow: return 4;
        default: return 5;
    }
}

std::string print_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    // Trim to the shortest representation that still round-trips.
    for (int prec = 1; prec < 17; ++prec) {
        char shorter[40];
        std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(shorter, "%lf", &back);
        if (back == v) return shorter;
    }
    return buf;
}

const char* func_name(Func f) {
    switch (f) {
        case Func::sin: return "sin";
        case Func::cos: return "cos";
        case Func::exp: return "exp";
        case Func::tanh: return "tanh";
        case Func::abs: return "abs";
        case Func::sign: return "sign";
    }
    return "?";
}

std::string print_node(const ExprNode* n) {
    auto wrap = [](const ExprNode* child, bool need) {
        const std::string s = print_node(child);
        return need ? "(" + s + ")" : s;
    };
    switch (n->kind) {
        case Kind::number: return print_number(n->value);
        case Kind::var_x: return "x";
        case Kind::var_k: return "k";
        case Kind::add:
            return wrap(n->a.get(), precedence(n->a.get()) < 1) + "+" +
                   wrap(n->b.get(), precedence(n->b.get()) < 1);
        case Kind::sub:
            return wrap(n->a.get(), precedence(n->a.get()) < 1) + "-" +
                   wrap(n->b.get(), precedence(n->b.get()) <= 1);
        case Kind::mul:
            return wrap(n->a.get(), precedence(n->a.get()) < 2) + "*" +
                   wrap(n->b.get(), precedence(n->b.get()) < 2);
        case Kind::div:
            return wrap(n->a.get(), precedence(n->a.get()) < 2) + "/" +
                   wrap(n->b.get(), precedence(n->b.get()) <= 2);
        case Kind::neg: return "-" + wrap(n->a.get(), precedence(n->a.get()) < 3);
        case Kind::pow:
            return wrap(n->a.get(), precedence(n->a.get()) < 5) + "^" + std::to_string(n->exponent);
        case Kind::call: return std::string(func_name(n->func)) + "(" + print_node(n->a.get()) + ")";
    }
    return "?";
}

// ---- parsing -----------------------------------------------------------

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        while (true) {
            const char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos;
            NodePtr rhs = parse_term();
            lhs = (c == '+') ? make_add(lhs, rhs) : make_sub(lhs, rhs);
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        while (true) {
            const char c = peek();
            if (c != '*' && c != '/') return lhs;
            const std::size_t op_pos = pos;
            ++pos;
            NodePtr rhs = parse_factor();
            if (c == '*') {
                lhs = make_mul(lhs, rhs);
            } else {
                if (contains_x(rhs.get())) {
                    pos = op_pos;
                    fail("divisor must not depend on x");
                }
                if (!contains_k(rhs.get())) {
                    // Constant divisor: reject an exact zero right away.
                    if (eval_node(rhs.get(), 0, 0.0) == 0.0) {
                        pos = op_pos;
                        fail("division by zero constant");
                    }
                }
                lhs = make_div(lhs, rhs);
            }
        }
    }

    NodePtr parse_factor() {
        bool negated = false;
        if (peek() == '-') {
            ++pos;
            negated = true;
        }
        NodePtr base = parse_base();
        if (peek() == '^') {
            ++pos;
            base = make_pow(base, parse_exponent());
        }
        return negated ? make_neg(base) : base;
    }

    int parse_exponent() {
        skip_ws();
        const std::size_t start = pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected nonnegative integer exponent");
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000) {
                pos = start;
                fail("exponent too large");
            }
            ++pos;
        }
        if (pos < text.size() && (text[pos] == '.' || text[pos] == 'e' || text[pos] == 'E')) {
            pos = start;
            fail("exponent must be a nonnegative integer literal");
        }
        return static_cast<int>(v);
    }

    NodePtr parse_base() {
        const char c = peek();
        if (c == '(') {
            ++pos;
            NodePtr inner = parse_expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
        fail("expected a number, variable, function call or '('");
    }

    NodePtr parse_number() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos < text.size() && text[pos] == '.') {
            ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        }
        if (pos == start || (pos == start + 1 && text[start] == '.')) {
            pos = start;
            fail("malformed number");
        }
        if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
            std::size_t e = pos + 1;
            if (e < text.size() && (text[e] == '+' || text[e] == '-')) ++e;
            if (e < text.size() && std::isdigit(static_cast<unsigned char>(text[e]))) {
                pos = e;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            }
        }
        const std::string tok = text.substr(start, pos - start);
        double v = 0.0;
        if (std::sscanf(tok.c_str(), "%lf", &v) != 1) {
            pos = start;
            fail("malformed number");
        }
        return make_number(v);
    }

    NodePtr parse_ident() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        const std::string name = text.substr(start, pos - start);
        if (name == "x") return make_var(Kind::var_x);
        if (name == "k") return make_var(Kind::var_k);
        Func f;
        if (name == "sin") f = Func::sin;
        else if (name == "cos") f = Func::cos;
        else if (name == "exp") f = Func::exp;
        else if (name == "tanh") f = Func::tanh;
        else if (name == "abs") f = Func::abs;
        else {
            pos = start;
            fail("unknown identifier '" + name + "'");
        }
        if (peek() != '(') fail("expected '(' after function name");
        ++pos;
        NodePtr arg = parse_expr();
        if (peek() != ')') fail("expected ')'");
        ++pos;
        return make_call(f, arg);
    }
};

// ---- antiderivative helpers ---------------------------------------------

// Coefficients of the expression as a polynomial in x for fixed k.
std::vector<double> poly_coeffs(const ExprNode* n, int k) {
    if (!contains_x(n)) return {eval_node(n, k, 0.0)};
    switch (n->kind) {
        case Kind::var_x: return {0.0, 1.0};
        case Kind::add:
        case Kind::sub: {
            std::vector<double> a = poly_coeffs(n->a.get(), k);
            std::vector<double> b = poly_coeffs(n->b.get(), k);
            if (b.size() > a.size()) a.resize(b.size(), 0.0);
            const double sign = (n->kind == Kind::add) ? 1.0 : -1.0;
            for (std::size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
            return a;
        }
        case Kind::mul: {
            const std::vector<double> a = poly_coeffs(n->a.get(), k);
            const std::vector<double> b = poly_coeffs(n->b.get(), k);
            std::vector<double> c(a.size() + b.size() - 1, 0.0);
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
            return c;
        }
        case Kind::div: {
            std::vector<double> a = poly_coeffs(n->a.get(), k);
            const double den = eval_node(n->b.get(), k, 0.0);
            if (den == 0.0) throw EvalError("division by zero divisor");
            for (double& c : a) c /= den;
            return a;
        }
        case Kind::neg: {
            std::vector<double> a = poly_coeffs(n->a.get(), k);
            for (double& c : a) c = -c;
            return a;
        }
        case Kind::pow: {
            const std::vector<double> base = poly_coeffs(n->a.get(), k);
            std::vector<double> r{1.0};
            for (int e = 0; e < n->exponent; ++e) {
                std::vector<double> c(r.size() + base.size() - 1, 0.0);
                for (std::size_t i = 0; i < r.size(); ++i)
                    for (std::size_t j = 0; j < base.size(); ++j) c[i + j] += r[i] * base[j];
                r = std::move(c);
            }
            return r;
        }
        default: throw EvalError("expression is not polynomial in x");
    }
}

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(f, a, m, fa, flm, fm);
    const double right = simpson(f, m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (!std::isfinite(delta)) throw EvalError("quadrature integrand is not finite");
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth >= Antiderivative::kMaxDepth)
        throw EvalError("quadrature did not converge within the depth limit");
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace
}  // namespace detail

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

Expression parse_expression(const std::string& text) {
    detail::Parser p(text);
    detail::NodePtr root = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("unexpected trailing input");
    return Expression(std::move(root));
}

double Expression::eval(int k, double x) const {
    if (!root_) throw EvalError("empty expression");
    const double v = detail::eval_node(root_.get(), k, x);
    if (!std::isfinite(v)) throw EvalError("expression evaluated to a non-finite value");
    return v;
}

Expression Expression::diff_x() const {
    if (!root_) throw EvalError("empty expression");
    return Expression(detail::diff_node(root_));
}

bool Expression::polynomial_in_x() const { return detail::polynomial_node(root_.get()); }

bool Expression::abs_encloses_x() const { return detail::abs_over_x_node(root_.get()); }

bool Expression::independent_of_x() const { return !detail::contains_x(root_.get()); }

std::string Expression::to_string() const {
    if (!root_) return "";
    return detail::print_node(root_.get());
}

double eval_f(const Expression& e, int k, double x) { return e.eval(k, x); }

Antiderivative::Antiderivative(Expression f) : f_(std::move(f)) {
    closed_form_ = f_.polynomial_in_x();
}

double Antiderivative::operator()(int k, double s) const {
    if (s == 0.0) return 0.0;
    if (closed_form_) {
        const std::vector<double> c = detail::poly_coeffs(f_.root(), k);
        // F(s) = s * sum_i c_i s^i / (i+1), Horner over descending degree.
        double acc = 0.0;
        for (std::size_t i = c.size(); i-- > 0;)
            acc = acc * s + c[i] / static_cast<double>(i + 1);
        const double v = acc * s;
        if (!std::isfinite(v)) throw EvalError("antiderivative overflow");
        return v;
    }
    const Expression& f = f_;
    const std::function<double(double)> g = [&](double t) { return detail::eval_node(f.root(), k, t); };
    const double fa = g(0.0);
    const double fb = g(s);
    const double fm = g(0.5 * s);
    const double whole = detail::simpson(g, 0.0, s, fa, fm, fb);
    const double v = detail::adaptive_simpson(g, 0.0, s, fa, fm, fb, whole, kQuadratureTol, 0);
    if (!std::isfinite(v)) throw EvalError("antiderivative overflow");
    return v;
}

double antiderivative_F(const Expression& e, int k, double s) { return Antiderivative(e)(k, s); }

Expression negate(const Expression& e) { return Expression(detail::make_neg(e.root_ptr())); }

}  // namespace varbvp
