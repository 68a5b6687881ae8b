#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fejer/core.hpp"

namespace fejer {

enum class NodeKind { Const, Var, Neg, Exp, Log, Abs, Add, Sub, Mul, Div, Pow };

/// Immutable expression tree in the single variable x. Copies share nodes.
///
/// The factory functions build nodes verbatim; the simplifying builders in
/// namespace `ops` fold constants and drop neutral elements.
class Expr {
public:
    static Expr constant(double value);
    static Expr variable();
    static Expr unary(NodeKind kind, Expr operand);
    static Expr binary(NodeKind kind, Expr lhs, Expr rhs);

    NodeKind kind() const noexcept;
    /// Value of a Const node; 0 for every other kind.
    double value() const noexcept;
    /// Operand of a unary node, left operand of a binary node.
    const Expr& lhs() const;
    const Expr& rhs() const;

    bool is_unary() const noexcept;
    bool is_binary() const noexcept;
    /// True when the subtree does not mention x.
    bool is_constant() const noexcept;
    std::size_t size() const noexcept;

    friend bool operator==(const Expr& l, const Expr& r);

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

namespace ops {
Expr neg(Expr u);
Expr exp(Expr u);
Expr log(Expr u);
Expr add(Expr u, Expr v);
Expr sub(Expr u, Expr v);
Expr mul(Expr u, Expr v);
Expr div(Expr u, Expr v);
Expr pow(Expr u, Expr v);
}  // namespace ops

/// Parses the expression grammar
///
///     expr    := term (("+" | "-") term)*
///     term    := unary (("*" | "/") unary)*
///     unary   := "-" unary | power
///     power   := primary ("^" unary)?
///     primary := number | "x" | "(" expr ")" | ident "(" expr ")"
///     ident   := "exp" | "log" | "abs"
///
/// so that ^ binds tighter than unary minus (-x^2 is -(x^2)) and is
/// right-associative. Throws ParseError carrying the byte offset.
Expr parse(std::string_view text);

/// Prints with the minimal parentheses needed for parse() to rebuild the
/// same tree. Negative constants (produced only by folding) print as "(-c)".
std::string to_string(const Expr& e);

/// Throws ErrorCode::Domain naming the offending subexpression for log of a
/// nonpositive value, division by zero, an undefined or overflowing power,
/// or exp overflow.
double eval(const Expr& e, double x);

/// Symbolic d/dx with light simplification. Throws NonConstantExponent when
/// an exponent depends on x and NotDifferentiable for abs.
Expr differentiate(const Expr& e);

/// Replaces every occurrence of x by `replacement`.
Expr substitute(const Expr& e, const Expr& replacement);

/// Flat postfix form of an expression for fast repeated evaluation.
class CompiledExpr {
public:
    CompiledExpr() = default;
    explicit CompiledExpr(const Expr& e);

    double operator()(double x) const;

private:
    struct Instr {
        NodeKind kind;
        double value;
    };
    std::vector<Instr> code_;
    std::size_t max_stack_ = 0;
    Expr source_ = Expr::constant(0.0);
};

/// A twice-differentiable function with its symbolic derivatives.
struct FunctionSpec {
    Expr ast = Expr::constant(0.0);
    Expr d1 = Expr::constant(0.0);
    Expr d2 = Expr::constant(0.0);
    std::string domain_note;

    double operator()(double x) const { return f_(x); }
    double first(double x) const { return d1_(x); }
    double second(double x) const { return d2_(x); }

    std::string text() const { return to_string(ast); }

    static FunctionSpec from(Expr ast);
    static FunctionSpec parse(std::string_view text);

private:
    CompiledExpr f_;
    CompiledExpr d1_;
    CompiledExpr d2_;
};

struct Range {
    double lower;
    double upper;
};

/// Symbolic range enclosure of e over I, built by interval evaluation where
/// monotone operations map endpoints exactly. Returns nullopt when some
/// operation cannot be bounded (log or division reaching zero, fractional
/// power of a possibly negative base, overflow). Rounding is not directed.
std::optional<Range> certified_range(const Expr& e, const Interval& I);

/// Bounds on f'' over I. Uses certified_range on the symbolic second
/// derivative (provenance Exact) and falls back to Chebyshev sampling plus
/// both endpoints, widened by 1e-9 (1 + |v|) (provenance SampledHeuristic).
CurvatureBounds curvature_range(const FunctionSpec& f, const Interval& I, int samples = 33);

/// The sampled estimate alone, regardless of whether a certified range exists.
CurvatureBounds sampled_curvature_range(const FunctionSpec& f, const Interval& I, int samples);

}  // namespace fejer
