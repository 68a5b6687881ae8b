#include <gtest/gtest.h>

#include <cmath>

#include "fejer/expr.hpp"
#include "random_ast.hpp"

using namespace fejer;

namespace {

double at(const char* text, double x) { return eval(parse(text), x); }

ErrorCode parse_code(const char* text) {
    try {
        parse(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "parsed: " << text;
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Parse, Precedence) {
    EXPECT_EQ(at("-x^2", 2.0), -4.0);
    EXPECT_EQ(at("2^3^2", 0.0), 512.0);
    EXPECT_EQ(at("1 - 2 - 3", 0.0), -4.0);
    EXPECT_EQ(at("8/2/2", 0.0), 2.0);
    EXPECT_EQ(at("2*x^2 + 3*x - 1", 2.0), 13.0);
    EXPECT_EQ(at("2^-1", 0.0), 0.5);
    EXPECT_EQ(at("(1 + x)*(1 - x)", 3.0), -8.0);
    EXPECT_EQ(at("abs(x - 3)", 1.0), 2.0);
    EXPECT_DOUBLE_EQ(at("exp(log(x))", 5.0), 5.0);
    EXPECT_EQ(at("1.5e2", 0.0), 150.0);
}

TEST(Parse, Errors) {
    EXPECT_EQ(parse_code("x +"), ErrorCode::Syntax);
    EXPECT_EQ(parse_code("(x"), ErrorCode::Syntax);
    EXPECT_EQ(parse_code("x y"), ErrorCode::Syntax);
    EXPECT_EQ(parse_code(""), ErrorCode::Syntax);
    EXPECT_EQ(parse_code("sin(x)"), ErrorCode::UnknownIdentifier);
    EXPECT_EQ(parse_code("y + 1"), ErrorCode::UnknownIdentifier);
    try {
        parse("x + * 2");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 4u);
    }
}

TEST(Print, MinimalParentheses) {
    EXPECT_EQ(to_string(parse("(x + 1)*(x - 1)")), "(x + 1)*(x - 1)");
    EXPECT_EQ(to_string(parse("x - (1 - x)")), "x - (1 - x)");
    EXPECT_EQ(to_string(parse("(x^2)^3")), "(x^2)^3");
    EXPECT_EQ(to_string(parse("x^(2^3)")), "x^2^3");
    EXPECT_EQ(to_string(parse("(-x)^2")), "(-x)^2");
    EXPECT_EQ(to_string(parse("-x^2")), "-x^2");
    EXPECT_EQ(to_string(Expr::constant(-2.5)), "(-2.5)");
}

TEST(Print, RoundTripsRandomTrees) {
    gen::Rng r(11);
    for (int i = 0; i < 500; ++i) {
        const Expr e = gen::any_tree(r, 5);
        const std::string text = to_string(e);
        EXPECT_TRUE(parse(text) == e) << text;
    }
}

TEST(Differentiate, Examples) {
    EXPECT_EQ(to_string(differentiate(parse("x^2"))), "2*x");
    EXPECT_EQ(to_string(differentiate(parse("-log(x)"))), "-(1/x)");
    EXPECT_EQ(to_string(differentiate(parse("exp(x)"))), "exp(x)");
    EXPECT_EQ(to_string(differentiate(parse("3*x + 1"))), "3");
    const FunctionSpec f = FunctionSpec::parse("x^3");
    EXPECT_EQ(f.second(2.0), 12.0);
}

TEST(Differentiate, Rejections) {
    try {
        differentiate(parse("abs(x)"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotDifferentiable);
    }
    try {
        differentiate(parse("x^x"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonConstantExponent);
    }
}

TEST(Differentiate, MatchesFiniteDifferences) {
    gen::Rng r(5);
    for (int i = 0; i < 100; ++i) {
        const FunctionSpec f = FunctionSpec::from(gen::smooth_tree(r, 4));
        for (int k = 1; k < 20; ++k) {
            const double x = 0.5 + k / 20.0;
            const double d1 = gen::derivative([&](double t) { return f(t); }, x);
            const double d2 = gen::derivative([&](double t) { return f.first(t); }, x);
            EXPECT_NEAR(f.first(x), d1, 1e-6 * (1.0 + std::abs(d1))) << f.text();
            EXPECT_NEAR(f.second(x), d2, 1e-6 * (1.0 + std::abs(d2))) << f.text();
        }
    }
}

TEST(Eval, DomainErrors) {
    const auto code = [](const char* text, double x) {
        try {
            eval(parse(text), x);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    EXPECT_EQ(code("log(x)", -1.0), ErrorCode::Domain);
    EXPECT_EQ(code("1/x", 0.0), ErrorCode::Domain);
    EXPECT_EQ(code("exp(x)", 1000.0), ErrorCode::Domain);
    EXPECT_EQ(code("x^0.5", -1.0), ErrorCode::Domain);
}

TEST(Compiled, AgreesWithTreeEvaluation) {
    gen::Rng r(9);
    for (int i = 0; i < 100; ++i) {
        const Expr e = gen::smooth_tree(r, 4);
        const CompiledExpr c(e);
        for (double x : {0.5, 0.75, 1.0, 1.5}) EXPECT_EQ(c(x), eval(e, x)) << to_string(e);
    }
    const CompiledExpr bad(parse("log(x)"));
    EXPECT_THROW(bad(-1.0), Error);
}

TEST(Substitute, ReplacesVariable) {
    const Expr e = substitute(parse("x^2 + 1"), parse("x + 1"));
    EXPECT_EQ(eval(e, 2.0), 10.0);
}

TEST(Curvature, CertifiedWhenRangeIsComputable) {
    const FunctionSpec f = FunctionSpec::parse("exp(x)");
    const CurvatureBounds c = curvature_range(f, Interval(0.0, 1.0));
    EXPECT_EQ(c.provenance, Provenance::Exact);
    EXPECT_DOUBLE_EQ(c.lower, 1.0);
    EXPECT_DOUBLE_EQ(c.upper, std::exp(1.0));

    const CurvatureBounds q = curvature_range(FunctionSpec::parse("x^2"), Interval(-1.0, 3.0));
    EXPECT_EQ(q.provenance, Provenance::Exact);
    EXPECT_EQ(q.lower, 2.0);
    EXPECT_EQ(q.upper, 2.0);
}

TEST(Curvature, FallsBackToSampling) {
    // The fractional power's base x - 2*x + 1.5 is positive on [0, 1] but its
    // naive range [-0.5, 2.5] is not, so certification gives up.
    const FunctionSpec f = FunctionSpec::parse("(x - 2*x + 1.5)^2.5");
    const CurvatureBounds c = curvature_range(f, Interval(0.0, 1.0));
    EXPECT_EQ(c.provenance, Provenance::SampledHeuristic);
    // f'' = 3.75 (1.5 - x)^0.5 ranges over [3.75 sqrt(0.5), 3.75 sqrt(1.5)].
    EXPECT_LE(c.lower, 3.75 * std::sqrt(0.5));
    EXPECT_GE(c.upper, 3.75 * std::sqrt(1.5));
    EXPECT_NEAR(c.lower, 3.75 * std::sqrt(0.5), 1e-8);
    EXPECT_THROW(sampled_curvature_range(f, Interval(0.0, 1.0), 1), Error);
}

TEST(Curvature, CertifiedRangeContainsSamples) {
    gen::Rng r(21);
    const Interval I(0.5, 1.5);
    for (int i = 0; i < 50; ++i) {
        const Expr e = gen::smooth_tree(r, 3);
        const auto range = certified_range(e, I);
        if (!range) continue;
        for (int k = 0; k <= 50; ++k) {
            const double v = eval(e, 0.5 + k / 50.0);
            EXPECT_LE(range->lower, v + 1e-12 * (1 + std::abs(v))) << to_string(e);
            EXPECT_GE(range->upper, v - 1e-12 * (1 + std::abs(v))) << to_string(e);
        }
    }
}
