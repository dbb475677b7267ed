#pragma once

#include <memory>
#include <string>

#include "riordan/rational.hpp"
#include "riordan/series.hpp"

namespace riordan {

// AST for the generating-function expression language used by the CLI
// and fixtures, e.g. "1/(1-t^4)" or "t/(1-t^2)".
//
// Grammar (whitespace insignificant, no implicit multiplication):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' uint)?
//   base   := 't' | uint ('/' uint)? | '(' expr ')' | '-' base
struct Expr {
    enum class Kind { Const, Var, Add, Sub, Neg, Mul, Div, Pow };
    Kind kind = Kind::Const;
    Rational value;                    // Const
    std::shared_ptr<const Expr> lhs;   // binary ops, Neg, Pow
    std::shared_ptr<const Expr> rhs;   // binary ops
    unsigned exponent = 0;             // Pow
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr expr_const(Rational v);
ExprPtr expr_var();
ExprPtr expr_node(Expr::Kind k, ExprPtr a, ExprPtr b);
ExprPtr expr_pow(ExprPtr base, unsigned e);

// Throws SyntaxError carrying the byte offset and expected-token set.
ExprPtr parse_expr(const std::string& text);

// Parenthesized rendering that reparses to a structurally equal tree.
std::string print_expr(const Expr& e);

bool expr_equal(const Expr& a, const Expr& b);

// Exact evaluation as a truncated series; the parity tag is inferred
// from the computed coefficients. OrderError/ZeroDivisor propagate from
// series division.
Series eval_series(const Expr& e, int trunc);

// parse + eval in one step (the usual CLI path).
Series eval_expr_string(const std::string& text, int trunc);

}  // namespace riordan
