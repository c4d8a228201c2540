#pragma once

#include "funcwalk/numeric.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace funcwalk {

/// Syntax error in an expression or walk notation; offset is a byte position
/// into the original input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset);
    std::size_t offset() const { return offset_; }
    const std::string& message() const { return message_; }

private:
    std::string message_;
    std::size_t offset_;
};

/// An edge-length function was evaluated at a pole (division by zero).
class SingularEvaluation : public std::runtime_error {
public:
    explicit SingularEvaluation(const Int& at);
    const Int& at() const { return at_; }

private:
    Int at_;
};

enum class ExprKind { Constant, Variable, Add, Subtract, Multiply, Divide, Power };

/// Immutable arithmetic expression in one variable n. Constants are
/// arbitrary-precision integers; power exponents are nonnegative integer
/// literals, so expressions without division are integer polynomials and
/// the rest are rational functions.
class ExprAst {
public:
    static ExprAst constant(Int value);
    static ExprAst variable();
    static ExprAst add(ExprAst lhs, ExprAst rhs);
    static ExprAst subtract(ExprAst lhs, ExprAst rhs);
    static ExprAst multiply(ExprAst lhs, ExprAst rhs);
    static ExprAst divide(ExprAst lhs, ExprAst rhs);
    static ExprAst power(ExprAst base, Int exponent);

    ExprKind kind() const;
    const Int& constant_value() const;  // Constant nodes
    const Int& exponent() const;        // Power nodes
    ExprAst lhs() const;                // binary nodes; Power base
    ExprAst rhs() const;                // binary nodes

    /// True when the tree contains no division, i.e. the expression is an
    /// integer polynomial and usable as a direction function f.
    bool integer_class() const;

    Int eval_int(const Int& n) const;
    Rational eval_rat(const Int& n) const;

    /// Parseable text form with minimal parentheses.
    std::string to_string() const;

    bool structural_equal(const ExprAst& other) const;

private:
    struct Node;
    explicit ExprAst(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// Recursive-descent parser for
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | atom ('^' uint)?
///   atom   := uint | variable | '(' expr ')'
/// Unary minus folds into constants; otherwise it desugars to 0 - x.
ExprAst parse_expr(std::string_view text, char variable = 'n');

/// Minimal P with f(n+P) = f(n) (mod m) for all n. For an integer
/// polynomial f the residues satisfy f(n+m) = f(n) (mod m), so the minimal
/// period exists and divides m; each divisor is checked over a full window.
unsigned residue_period(const ExprAst& f, unsigned m);

/// Probe-based identity: a(n) == b(n) at n = 1..probes, skipping points
/// where either side is singular. Complete for rational functions when
/// probes exceed the degree of the cross-difference numerator.
bool exprs_identical(const ExprAst& a, const ExprAst& b, int probes);

/// Substitutes n + offset for n.
ExprAst shift_variable(const ExprAst& e, const Int& offset);

/// Structural bound on numerator plus denominator degree; suitable as a
/// probe budget for exprs_identical (use bound(a) + bound(b) + 1).
long degree_bound(const ExprAst& e);

}  // namespace funcwalk
