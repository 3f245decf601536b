#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "ssf/jet.hpp"

namespace ssf {

enum class UnaryFn { Sin, Cos, Tan, Exp, Log, Atan, Sqrt };

const char* unary_fn_name(UnaryFn fn);

/// Immutable expression tree over one variable `s`.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Neg, Pow, Call };

    Kind kind;
    double value{};  // Constant
    UnaryFn fn{};    // Call
    ExprPtr lhs;     // left child; sole child of Neg and Call
    ExprPtr rhs;     // right child of binary nodes
};

ExprPtr make_constant(double value);
ExprPtr make_variable();
ExprPtr make_add(ExprPtr a, ExprPtr b);
ExprPtr make_sub(ExprPtr a, ExprPtr b);
ExprPtr make_mul(ExprPtr a, ExprPtr b);
ExprPtr make_div(ExprPtr a, ExprPtr b);
ExprPtr make_neg(ExprPtr a);
ExprPtr make_pow(ExprPtr base, ExprPtr exponent);
ExprPtr make_call(UnaryFn fn, ExprPtr arg);

bool expr_equal(const Expr& a, const Expr& b);

/// Renders with standard precedence (pow > unary minus > mul/div > add/sub);
/// parse(print(tree)) reproduces the tree node for node.
std::string print_expr(const Expr& expr);

/// Evaluates with jet arithmetic; pass Jet3::variable(s) for derivatives or
/// Jet3::constant(s) for a plain value in v0.
Jet3 eval_expr(const Expr& expr, const Jet3& s);

/// A parsed three-component curve gamma(s).
struct CurveExpr {
    std::array<ExprPtr, 3> components;
    std::string source_text;
    std::optional<std::pair<double, double>> domain; // closed interval of valid s
};

/// Parses a single expression (no commas at top level).
ExprPtr parse_expression(const std::string& text);

/// Parses "expr, expr, expr" into a curve.
CurveExpr parse_curve(const std::string& text);

std::string print_curve(const CurveExpr& curve);

/// Component jets (value and first three derivatives) of the curve at s.
/// Throws DomainError if s lies outside curve.domain or any component
/// evaluates outside the domain of an elementary function or to a
/// non-finite value.
std::array<Jet3, 3> eval_jet3(const CurveExpr& curve, double s);

} // namespace ssf
