#include "fejer/expr.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace fejer {

struct Expr::Node {
    NodeKind kind;
    double value = 0.0;
    std::optional<Expr> lhs;
    std::optional<Expr> rhs;
    bool constant = true;
    std::size_t size = 1;
};

namespace {

bool kind_is_unary(NodeKind k) {
    return k == NodeKind::Neg || k == NodeKind::Exp || k == NodeKind::Log || k == NodeKind::Abs;
}

bool kind_is_binary(NodeKind k) {
    return k == NodeKind::Add || k == NodeKind::Sub || k == NodeKind::Mul || k == NodeKind::Div ||
           k == NodeKind::Pow;
}

}  // namespace

Expr Expr::constant(double value) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Const;
    n->value = value;
    return Expr(std::move(n));
}

Expr Expr::variable() {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Var;
    n->constant = false;
    return Expr(std::move(n));
}

Expr Expr::unary(NodeKind kind, Expr operand) {
    if (!kind_is_unary(kind)) throw Error(ErrorCode::InvalidArgument, "not a unary node kind");
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->constant = operand.is_constant();
    n->size = 1 + operand.size();
    n->lhs = std::move(operand);
    return Expr(std::move(n));
}

Expr Expr::binary(NodeKind kind, Expr lhs, Expr rhs) {
    if (!kind_is_binary(kind)) throw Error(ErrorCode::InvalidArgument, "not a binary node kind");
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->constant = lhs.is_constant() && rhs.is_constant();
    n->size = 1 + lhs.size() + rhs.size();
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return Expr(std::move(n));
}

NodeKind Expr::kind() const noexcept { return node_->kind; }
double Expr::value() const noexcept { return node_->value; }
bool Expr::is_unary() const noexcept { return kind_is_unary(node_->kind); }
bool Expr::is_binary() const noexcept { return kind_is_binary(node_->kind); }
bool Expr::is_constant() const noexcept { return node_->constant; }
std::size_t Expr::size() const noexcept { return node_->size; }

const Expr& Expr::lhs() const {
    if (!node_->lhs) throw Error(ErrorCode::InvalidArgument, "leaf node has no operand");
    return *node_->lhs;
}

const Expr& Expr::rhs() const {
    if (!node_->rhs) throw Error(ErrorCode::InvalidArgument, "node has no right operand");
    return *node_->rhs;
}

bool operator==(const Expr& l, const Expr& r) {
    if (l.node_ == r.node_) return true;
    if (l.kind() != r.kind()) return false;
    if (l.kind() == NodeKind::Const) {
        return l.value() == r.value() && std::signbit(l.value()) == std::signbit(r.value());
    }
    if (l.kind() == NodeKind::Var) return true;
    if (!(l.lhs() == r.lhs())) return false;
    return !l.is_binary() || l.rhs() == r.rhs();
}

// ---------------------------------------------------------------------------
// Simplifying builders

namespace ops {

namespace {
bool is_const(const Expr& e, double v) { return e.kind() == NodeKind::Const && e.value() == v; }
bool is_const(const Expr& e) { return e.kind() == NodeKind::Const; }

Expr fold_or(double folded, Expr fallback) {
    return std::isfinite(folded) ? Expr::constant(folded) : fallback;
}
}  // namespace

Expr neg(Expr u) {
    if (is_const(u)) return Expr::constant(-u.value());
    if (u.kind() == NodeKind::Neg) return u.lhs();
    return Expr::unary(NodeKind::Neg, std::move(u));
}

Expr exp(Expr u) {
    if (is_const(u)) return fold_or(std::exp(u.value()), Expr::unary(NodeKind::Exp, u));
    return Expr::unary(NodeKind::Exp, std::move(u));
}

Expr log(Expr u) {
    if (is_const(u) && u.value() > 0.0) return Expr::constant(std::log(u.value()));
    return Expr::unary(NodeKind::Log, std::move(u));
}

Expr add(Expr u, Expr v) {
    if (is_const(u) && is_const(v)) {
        return fold_or(u.value() + v.value(), Expr::binary(NodeKind::Add, u, v));
    }
    if (is_const(u, 0.0)) return v;
    if (is_const(v, 0.0)) return u;
    if (v.kind() == NodeKind::Neg) return Expr::binary(NodeKind::Sub, std::move(u), v.lhs());
    return Expr::binary(NodeKind::Add, std::move(u), std::move(v));
}

Expr sub(Expr u, Expr v) {
    if (is_const(u) && is_const(v)) {
        return fold_or(u.value() - v.value(), Expr::binary(NodeKind::Sub, u, v));
    }
    if (is_const(v, 0.0)) return u;
    if (is_const(u, 0.0)) return neg(std::move(v));
    if (v.kind() == NodeKind::Neg) return Expr::binary(NodeKind::Add, std::move(u), v.lhs());
    return Expr::binary(NodeKind::Sub, std::move(u), std::move(v));
}

Expr mul(Expr u, Expr v) {
    if (is_const(u) && is_const(v)) {
        return fold_or(u.value() * v.value(), Expr::binary(NodeKind::Mul, u, v));
    }
    if (is_const(v)) std::swap(u, v);
    if (is_const(u, 0.0)) return Expr::constant(0.0);
    if (is_const(u, 1.0)) return v;
    if (is_const(u, -1.0)) return neg(std::move(v));
    if (is_const(u) && v.kind() == NodeKind::Mul && is_const(v.lhs())) {
        return mul(Expr::constant(u.value() * v.lhs().value()), v.rhs());
    }
    if (u.kind() == NodeKind::Neg) return neg(mul(u.lhs(), std::move(v)));
    if (v.kind() == NodeKind::Neg) return neg(mul(std::move(u), v.lhs()));
    return Expr::binary(NodeKind::Mul, std::move(u), std::move(v));
}

Expr div(Expr u, Expr v) {
    if (is_const(u) && is_const(v) && v.value() != 0.0) {
        return fold_or(u.value() / v.value(), Expr::binary(NodeKind::Div, u, v));
    }
    if (is_const(v, 1.0)) return u;
    if (is_const(u, 0.0)) return Expr::constant(0.0);
    return Expr::binary(NodeKind::Div, std::move(u), std::move(v));
}

Expr pow(Expr u, Expr v) {
    if (is_const(v, 1.0)) return u;
    if (is_const(v, 0.0)) return Expr::constant(1.0);
    if (is_const(u) && is_const(v)) {
        return fold_or(std::pow(u.value(), v.value()), Expr::binary(NodeKind::Pow, u, v));
    }
    return Expr::binary(NodeKind::Pow, std::move(u), std::move(v));
}

}  // namespace ops

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr run() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError(ErrorCode::Syntax, "empty expression", pos_);
        Expr e = expr();
        skip_space();
        if (pos_ != text_.size()) {
            throw ParseError(ErrorCode::Syntax,
                             "unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        }
        return e;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            throw ParseError(ErrorCode::Syntax, std::string("expected '") + c + "'", pos_);
        }
    }

    Expr expr() {
        Expr lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = Expr::binary(NodeKind::Add, lhs, term());
            } else if (accept('-')) {
                lhs = Expr::binary(NodeKind::Sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    Expr term() {
        Expr lhs = unary();
        for (;;) {
            if (accept('*')) {
                lhs = Expr::binary(NodeKind::Mul, lhs, unary());
            } else if (accept('/')) {
                lhs = Expr::binary(NodeKind::Div, lhs, unary());
            } else {
                return lhs;
            }
        }
    }

    Expr unary() {
        if (accept('-')) return Expr::unary(NodeKind::Neg, unary());
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (accept('^')) return Expr::binary(NodeKind::Pow, base, unary());
        return base;
    }

    Expr primary() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError(ErrorCode::Syntax, "unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expr inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        throw ParseError(ErrorCode::Syntax, "unexpected '" + std::string(1, c) + "'", pos_);
    }

    Expr number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++n;
            }
            return n;
        };
        std::size_t mantissa = digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            mantissa += digits();
        }
        if (mantissa == 0) throw ParseError(ErrorCode::Syntax, "malformed number", start);
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (digits() == 0) throw ParseError(ErrorCode::Syntax, "malformed exponent", start);
        }
        double value = 0.0;
        const char* first = text_.data() + start;
        const char* last = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
            throw ParseError(ErrorCode::Syntax, "number out of range", start);
        }
        return Expr::constant(value);
    }

    Expr identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name == "x") return Expr::variable();
        NodeKind kind;
        if (name == "exp") {
            kind = NodeKind::Exp;
        } else if (name == "log") {
            kind = NodeKind::Log;
        } else if (name == "abs") {
            kind = NodeKind::Abs;
        } else {
            throw ParseError(ErrorCode::UnknownIdentifier,
                             "unknown identifier '" + std::string(name) + "'", start);
        }
        expect('(');
        Expr arg = expr();
        expect(')');
        return Expr::unary(kind, arg);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Printer

namespace {

int precedence(const Expr& e) {
    switch (e.kind()) {
        case NodeKind::Add:
        case NodeKind::Sub: return 1;
        case NodeKind::Mul:
        case NodeKind::Div: return 2;
        case NodeKind::Neg: return 3;
        case NodeKind::Pow: return 4;
        default: return 5;
    }
}

std::string format_number(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), ptr);
}

void print(const Expr& e, int min_prec, std::string& out) {
    const bool wrap = precedence(e) < min_prec;
    if (wrap) out += '(';
    switch (e.kind()) {
        case NodeKind::Const:
            if (std::signbit(e.value())) {
                out += "(-" + format_number(-e.value()) + ")";
            } else {
                out += format_number(e.value());
            }
            break;
        case NodeKind::Var: out += 'x'; break;
        case NodeKind::Neg:
            out += '-';
            print(e.lhs(), 3, out);
            break;
        case NodeKind::Exp:
        case NodeKind::Log:
        case NodeKind::Abs:
            out += e.kind() == NodeKind::Exp ? "exp(" : e.kind() == NodeKind::Log ? "log(" : "abs(";
            print(e.lhs(), 0, out);
            out += ')';
            break;
        case NodeKind::Add:
        case NodeKind::Sub:
            print(e.lhs(), 1, out);
            out += e.kind() == NodeKind::Add ? " + " : " - ";
            print(e.rhs(), 2, out);
            break;
        case NodeKind::Mul:
        case NodeKind::Div:
            print(e.lhs(), 2, out);
            out += e.kind() == NodeKind::Mul ? '*' : '/';
            print(e.rhs(), 3, out);
            break;
        case NodeKind::Pow:
            print(e.lhs(), 5, out);
            out += '^';
            // A negative exponent reads better parenthesized; parentheses never
            // create nodes, so the tree is unchanged.
            print(e.rhs(), e.rhs().kind() == NodeKind::Neg ? 5 : 3, out);
            break;
    }
    if (wrap) out += ')';
}

}  // namespace

std::string to_string(const Expr& e) {
    std::string out;
    print(e, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

[[noreturn]] void domain_error(const Expr& node, const std::string& what) {
    throw Error(ErrorCode::Domain, what + " in '" + to_string(node) + "'");
}

// Returns false when the operation leaves the natural domain; the caller
// reports the offending node.
bool apply_unary(NodeKind k, double u, double& out) {
    switch (k) {
        case NodeKind::Neg: out = -u; return true;
        case NodeKind::Abs: out = std::abs(u); return true;
        case NodeKind::Exp: out = std::exp(u); return std::isfinite(out) || std::isnan(u);
        case NodeKind::Log:
            if (!(u > 0.0)) return false;
            out = std::log(u);
            return true;
        default: return false;
    }
}

bool apply_binary(NodeKind k, double u, double v, double& out) {
    switch (k) {
        case NodeKind::Add: out = u + v; return true;
        case NodeKind::Sub: out = u - v; return true;
        case NodeKind::Mul: out = u * v; return true;
        case NodeKind::Div:
            if (v == 0.0) return false;
            out = u / v;
            return true;
        case NodeKind::Pow:
            out = std::pow(u, v);
            return std::isfinite(out);
        default: return false;
    }
}

std::string failure_message(NodeKind k, double u, double v) {
    std::ostringstream msg;
    switch (k) {
        case NodeKind::Log: msg << "log of nonpositive value " << u; break;
        case NodeKind::Exp: msg << "exp overflow at " << u; break;
        case NodeKind::Div: msg << "division by zero"; break;
        case NodeKind::Pow: msg << "power " << u << "^" << v << " undefined or overflowing"; break;
        default: msg << "undefined value"; break;
    }
    return msg.str();
}

}  // namespace

double eval(const Expr& e, double x) {
    switch (e.kind()) {
        case NodeKind::Const: return e.value();
        case NodeKind::Var: return x;
        case NodeKind::Neg:
        case NodeKind::Exp:
        case NodeKind::Log:
        case NodeKind::Abs: {
            const double u = eval(e.lhs(), x);
            double out = 0.0;
            if (!apply_unary(e.kind(), u, out)) domain_error(e, failure_message(e.kind(), u, 0.0));
            return out;
        }
        default: {
            const double u = eval(e.lhs(), x);
            const double v = eval(e.rhs(), x);
            double out = 0.0;
            if (!apply_binary(e.kind(), u, v, out)) domain_error(e, failure_message(e.kind(), u, v));
            return out;
        }
    }
}

CompiledExpr::CompiledExpr(const Expr& e) : source_(e) {
    std::size_t depth = 0;
    auto emit = [&](auto&& self, const Expr& node) -> void {
        if (node.is_unary()) {
            self(self, node.lhs());
        } else if (node.is_binary()) {
            self(self, node.lhs());
            self(self, node.rhs());
        }
        code_.push_back({node.kind(), node.value()});
        if (node.is_binary()) {
            --depth;
        } else if (!node.is_unary()) {
            max_stack_ = std::max(max_stack_, ++depth);
        }
    };
    emit(emit, e);
}

double CompiledExpr::operator()(double x) const {
    constexpr std::size_t kInline = 64;
    std::array<double, kInline> small{};
    std::vector<double> large;
    double* stack = small.data();
    if (max_stack_ > kInline) {
        large.resize(max_stack_);
        stack = large.data();
    }
    std::size_t top = 0;
    for (const Instr& in : code_) {
        switch (in.kind) {
            case NodeKind::Const: stack[top++] = in.value; break;
            case NodeKind::Var: stack[top++] = x; break;
            case NodeKind::Neg: stack[top - 1] = -stack[top - 1]; break;
            case NodeKind::Abs: stack[top - 1] = std::abs(stack[top - 1]); break;
            case NodeKind::Exp:
            case NodeKind::Log:
                if (!apply_unary(in.kind, stack[top - 1], stack[top - 1])) return eval(source_, x);
                break;
            default: {
                const double v = stack[--top];
                if (!apply_binary(in.kind, stack[top - 1], v, stack[top - 1])) {
                    return eval(source_, x);
                }
            }
        }
    }
    return stack[0];
}

// ---------------------------------------------------------------------------
// Differentiation

Expr differentiate(const Expr& e) {
    if (e.is_constant()) return Expr::constant(0.0);
    switch (e.kind()) {
        case NodeKind::Var: return Expr::constant(1.0);
        case NodeKind::Neg: return ops::neg(differentiate(e.lhs()));
        case NodeKind::Exp: return ops::mul(e, differentiate(e.lhs()));
        case NodeKind::Log: return ops::div(differentiate(e.lhs()), e.lhs());
        case NodeKind::Abs:
            throw Error(ErrorCode::NotDifferentiable, "abs is not differentiable: '" + to_string(e) + "'");
        case NodeKind::Add: return ops::add(differentiate(e.lhs()), differentiate(e.rhs()));
        case NodeKind::Sub: return ops::sub(differentiate(e.lhs()), differentiate(e.rhs()));
        case NodeKind::Mul: {
            const Expr& u = e.lhs();
            const Expr& v = e.rhs();
            return ops::add(ops::mul(differentiate(u), v), ops::mul(u, differentiate(v)));
        }
        case NodeKind::Div: {
            const Expr& u = e.lhs();
            const Expr& v = e.rhs();
            if (v.is_constant()) return ops::div(differentiate(u), v);
            return ops::div(ops::sub(ops::mul(differentiate(u), v), ops::mul(u, differentiate(v))),
                            ops::pow(v, Expr::constant(2.0)));
        }
        case NodeKind::Pow: {
            if (!e.rhs().is_constant()) {
                throw Error(ErrorCode::NonConstantExponent,
                            "exponent depends on x: '" + to_string(e) + "'");
            }
            const double c = eval(e.rhs(), 0.0);
            const Expr& u = e.lhs();
            return ops::mul(ops::mul(Expr::constant(c), ops::pow(u, Expr::constant(c - 1.0))),
                            differentiate(u));
        }
        default: return Expr::constant(0.0);
    }
}

Expr substitute(const Expr& e, const Expr& replacement) {
    if (e.is_constant()) return e;
    if (e.kind() == NodeKind::Var) return replacement;
    if (e.is_unary()) return Expr::unary(e.kind(), substitute(e.lhs(), replacement));
    return Expr::binary(e.kind(), substitute(e.lhs(), replacement), substitute(e.rhs(), replacement));
}

// ---------------------------------------------------------------------------
// FunctionSpec

namespace {

void collect_notes(const Expr& e, bool& log, bool& div, bool& frac) {
    if (e.kind() == NodeKind::Log) log = true;
    if (e.kind() == NodeKind::Div) div = true;
    if (e.kind() == NodeKind::Pow) {
        if (!e.rhs().is_constant()) {
            frac = true;
        } else {
            const double c = eval(e.rhs(), 0.0);
            if (c != std::floor(c)) frac = true;
            if (c < 0.0) div = true;
        }
    }
    if (e.is_unary() || e.is_binary()) collect_notes(e.lhs(), log, div, frac);
    if (e.is_binary()) collect_notes(e.rhs(), log, div, frac);
}

}  // namespace

FunctionSpec FunctionSpec::from(Expr ast) {
    FunctionSpec f;
    f.ast = ast;
    f.d1 = differentiate(ast);
    f.d2 = differentiate(f.d1);
    bool log = false, div = false, frac = false;
    collect_notes(ast, log, div, frac);
    std::string note;
    auto append = [&](const char* s) {
        if (!note.empty()) note += "; ";
        note += s;
    };
    if (log) append("log requires a positive argument");
    if (div) append("division requires a nonzero divisor");
    if (frac) append("fractional powers require a nonnegative base");
    f.domain_note = note.empty() ? "defined for all real x" : note;
    f.f_ = CompiledExpr(f.ast);
    f.d1_ = CompiledExpr(f.d1);
    f.d2_ = CompiledExpr(f.d2);
    return f;
}

FunctionSpec FunctionSpec::parse(std::string_view text) { return from(fejer::parse(text)); }

// ---------------------------------------------------------------------------
// Curvature ranges

namespace {

std::optional<Range> finite_range(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) return std::nullopt;
    return Range{std::min(lo, hi), std::max(lo, hi)};
}

std::optional<Range> range_product(Range u, Range v) {
    const double p[] = {u.lower * v.lower, u.lower * v.upper, u.upper * v.lower, u.upper * v.upper};
    return finite_range(*std::min_element(std::begin(p), std::end(p)),
                        *std::max_element(std::begin(p), std::end(p)));
}

std::optional<Range> range_reciprocal(Range v) {
    if (v.lower <= 0.0 && v.upper >= 0.0) return std::nullopt;
    return finite_range(1.0 / v.upper, 1.0 / v.lower);
}

std::optional<Range> range_power(Range u, double c) {
    if (c == 0.0) return Range{1.0, 1.0};
    const bool integer = c == std::floor(c) && std::abs(c) < 9007199254740992.0;
    if (integer) {
        const double n = std::abs(c);
        const bool odd = std::fmod(n, 2.0) == 1.0;
        Range r{};
        if (odd || u.lower >= 0.0) {
            r = {std::pow(u.lower, n), std::pow(u.upper, n)};
        } else if (u.upper <= 0.0) {
            r = {std::pow(u.upper, n), std::pow(u.lower, n)};
        } else {
            r = {0.0, std::max(std::pow(u.lower, n), std::pow(u.upper, n))};
        }
        auto fr = finite_range(r.lower, r.upper);
        if (!fr || c > 0.0) return fr;
        return range_reciprocal(*fr);
    }
    if (u.lower < 0.0 || (c < 0.0 && u.lower == 0.0)) return std::nullopt;
    return finite_range(std::pow(u.lower, c), std::pow(u.upper, c));
}

std::optional<Range> range_of(const Expr& e, const Interval& I) {
    switch (e.kind()) {
        case NodeKind::Const: return Range{e.value(), e.value()};
        case NodeKind::Var: return Range{I.a(), I.b()};
        default: break;
    }
    auto u = range_of(e.lhs(), I);
    if (!u) return std::nullopt;
    switch (e.kind()) {
        case NodeKind::Neg: return Range{-u->upper, -u->lower};
        case NodeKind::Exp: return finite_range(std::exp(u->lower), std::exp(u->upper));
        case NodeKind::Log:
            if (!(u->lower > 0.0)) return std::nullopt;
            return finite_range(std::log(u->lower), std::log(u->upper));
        case NodeKind::Abs:
            if (u->lower >= 0.0) return u;
            if (u->upper <= 0.0) return Range{-u->upper, -u->lower};
            return Range{0.0, std::max(-u->lower, u->upper)};
        case NodeKind::Pow: {
            if (!e.rhs().is_constant()) return std::nullopt;
            return range_power(*u, eval(e.rhs(), 0.0));
        }
        default: break;
    }
    auto v = range_of(e.rhs(), I);
    if (!v) return std::nullopt;
    switch (e.kind()) {
        case NodeKind::Add: return finite_range(u->lower + v->lower, u->upper + v->upper);
        case NodeKind::Sub: return finite_range(u->lower - v->upper, u->upper - v->lower);
        case NodeKind::Mul: return range_product(*u, *v);
        case NodeKind::Div: {
            auto inv = range_reciprocal(*v);
            if (!inv) return std::nullopt;
            return range_product(*u, *inv);
        }
        default: return std::nullopt;
    }
}

}  // namespace

std::optional<Range> certified_range(const Expr& e, const Interval& I) {
    try {
        return range_of(e, I);
    } catch (const Error&) {
        return std::nullopt;
    }
}

CurvatureBounds sampled_curvature_range(const FunctionSpec& f, const Interval& I, int samples) {
    if (samples < 2) throw Error(ErrorCode::InvalidArgument, "curvature sampling needs at least 2 points");
    double lo = std::min(f.second(I.a()), f.second(I.b()));
    double hi = std::max(f.second(I.a()), f.second(I.b()));
    const double half = 0.5 * I.width();
    for (int k = 0; k < samples; ++k) {
        const double theta = (2.0 * k + 1.0) * std::numbers::pi / (2.0 * samples);
        const double x = std::clamp(I.midpoint() + half * std::cos(theta), I.a(), I.b());
        const double v = f.second(x);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    lo -= 1e-9 * (1.0 + std::abs(lo));
    hi += 1e-9 * (1.0 + std::abs(hi));
    return CurvatureBounds(lo, hi, Provenance::SampledHeuristic);
}

CurvatureBounds curvature_range(const FunctionSpec& f, const Interval& I, int samples) {
    if (samples < 2) throw Error(ErrorCode::InvalidArgument, "curvature sampling needs at least 2 points");
    if (auto r = certified_range(f.d2, I)) {
        return CurvatureBounds(r->lower, r->upper, Provenance::Exact);
    }
    return sampled_curvature_range(f, I, samples);
}

}  // namespace fejer
